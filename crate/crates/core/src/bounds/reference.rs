//! Published values of the covering-bound tables, for comparison.
//!
//! Each Table I entry is `(m, n, rho, cell)` for q = 2, where `cell` is
//! written as in the table ("b 3-4 A"), with powers of two spelled `2^k`.
//! Table II entries are `(m, n, rho, k_lower, k_upper)`.

pub const TABLE_I: &[(u32, u32, u32, &str)] = &[
    (2, 2, 1, "b 3-4 A"),
    (2, 2, 2, "1"),
    (3, 2, 1, "b 4 B"),
    (3, 2, 2, "1"),
    (3, 3, 1, "b 11-32 C"),
    (3, 3, 2, "a 2-4 C"),
    (3, 3, 3, "1"),
    (4, 2, 1, "b 7-8 B"),
    (4, 2, 2, "1"),
    (4, 3, 1, "b 40-64 B"),
    (4, 3, 2, "b 4-8 C"),
    (4, 3, 3, "1"),
    (4, 4, 1, "c 293-1024 C"),
    (4, 4, 2, "b 10-64 C"),
    (4, 4, 3, "a 2-8 C"),
    (4, 4, 4, "1"),
    (5, 2, 1, "b 12-16 B"),
    (5, 2, 2, "1"),
    (5, 3, 1, "b 154-256 B"),
    (5, 3, 2, "b 6-8 B"),
    (5, 3, 3, "1"),
    (5, 4, 1, "b 2267-4096 B"),
    (5, 4, 2, "b 33-256 C"),
    (5, 4, 3, "a 3-8 C"),
    (5, 4, 4, "1"),
    (5, 5, 1, "b 34894-2^17 C"),
    (5, 5, 2, "b 233-2979 E"),
    (5, 5, 3, "b 10-128 C"),
    (5, 5, 4, "a 2-8 C"),
    (5, 5, 5, "1"),
    (6, 2, 1, "b 23-32 B"),
    (6, 2, 2, "1"),
    (6, 3, 1, "b 601-1024 B"),
    (6, 3, 2, "a 10-16 B"),
    (6, 3, 3, "1"),
    (6, 4, 1, "b 17822-2^15 B"),
    (6, 4, 2, "b 123-256 B"),
    (6, 4, 3, "b 6-16 C"),
    (6, 4, 4, "1"),
    (6, 5, 1, "b 550395-2^20 B"),
    (6, 5, 2, "b 1770-2^14 C"),
    (6, 5, 3, "c 31-256 C"),
    (6, 5, 4, "a 3-16 C"),
    (6, 5, 5, "1"),
    (6, 6, 1, "c 17318410-2^26 C"),
    (6, 6, 2, "c 27065-424990 E"),
    (6, 6, 3, "c 214-4299 E"),
    (6, 6, 4, "c 9-181 D"),
    (6, 6, 5, "a 2-16 C"),
    (6, 6, 6, "1"),
    (7, 2, 1, "b 44-64 B"),
    (7, 2, 2, "1"),
    (7, 3, 1, "b 2372-4096 B"),
    (7, 3, 2, "a 19-32 B"),
    (7, 3, 3, "1"),
    (7, 4, 1, "b 141231-2^18 B"),
    (7, 4, 2, "c 484-1024 B"),
    (7, 4, 3, "b 10-16 B"),
    (7, 4, 4, "1"),
    (7, 5, 1, "b 8735289-2^24 B"),
    (7, 5, 2, "b 13835-2^15 B"),
    (7, 5, 3, "b 112-1024 C"),
    (7, 5, 4, "a 5-16 C"),
    (7, 5, 5, "1"),
    (7, 6, 1, "b 549829402-2^30 B"),
    (7, 6, 2, "c 42229-2^22 C"),
    (7, 6, 3, "b 1584-2^15 C"),
    (7, 6, 4, "b 31-746 E"),
    (7, 6, 5, "a 3-16 C"),
    (7, 6, 6, "1"),
    (7, 7, 1, "b 34901004402-2^37 C"),
    (7, 7, 2, "c 13205450-244855533 E"),
    (7, 7, 3, "b 23978-596534 E"),
    (7, 7, 4, "c 203-5890 E"),
    (7, 7, 5, "a 8-242 D"),
    (7, 7, 6, "a 2-16 C"),
];

pub const TABLE_II: &[(u32, u32, u32, u32, u32)] = &[
    (4, 4, 2, 1, 2),
    (4, 4, 3, 1, 1),
    (4, 4, 4, 0, 0),
    (5, 4, 2, 1, 2),
    (5, 4, 3, 1, 1),
    (5, 4, 4, 0, 0),
    (5, 5, 2, 2, 3),
    (5, 5, 3, 1, 2),
    (5, 5, 4, 1, 1),
    (5, 5, 5, 0, 0),
    (6, 4, 2, 2, 2),
    (6, 4, 3, 1, 1),
    (6, 4, 4, 0, 0),
    (6, 5, 2, 2, 3),
    (6, 5, 3, 1, 2),
    (6, 5, 4, 1, 1),
    (6, 5, 5, 0, 0),
    (6, 6, 2, 3, 4),
    (6, 6, 3, 2, 3),
    (6, 6, 4, 1, 2),
    (6, 6, 5, 1, 1),
    (6, 6, 6, 0, 0),
    (7, 4, 2, 2, 2),
    (7, 4, 3, 1, 1),
    (7, 4, 4, 0, 0),
    (7, 5, 2, 2, 3),
    (7, 5, 3, 1, 2),
    (7, 5, 4, 1, 1),
    (7, 5, 5, 0, 0),
    (7, 6, 2, 3, 4),
    (7, 6, 3, 2, 3),
    (7, 6, 4, 1, 2),
    (7, 6, 5, 1, 1),
    (7, 6, 6, 0, 0),
    (7, 7, 2, 4, 5),
    (7, 7, 3, 3, 4),
    (7, 7, 4, 2, 3),
    (7, 7, 5, 1, 2),
    (7, 7, 6, 1, 1),
    (8, 4, 2, 2, 2),
    (8, 4, 3, 1, 1),
    (8, 4, 4, 0, 0),
    (8, 5, 2, 3, 3),
    (8, 5, 3, 2, 2),
    (8, 5, 4, 1, 1),
    (8, 5, 5, 0, 0),
    (8, 6, 2, 3, 4),
    (8, 6, 3, 2, 3),
    (8, 6, 4, 1, 2),
    (8, 6, 5, 1, 1),
    (8, 6, 6, 0, 0),
    (8, 7, 2, 4, 5),
    (8, 7, 3, 3, 4),
    (8, 7, 4, 2, 3),
    (8, 7, 5, 1, 2),
    (8, 7, 6, 1, 1),
    (8, 8, 2, 5, 6),
    (8, 8, 3, 3, 5),
    (8, 8, 4, 2, 4),
    (8, 8, 5, 1, 3),
    (8, 8, 6, 1, 2),
];

/// A parsed Table I cell.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PublishedCell {
    pub lower_tag: Option<char>,
    pub lower: u64,
    pub upper: u64,
    pub upper_tag: Option<char>,
}

fn number(s: &str) -> Option<u64> {
    match s.strip_prefix("2^") {
        Some(e) => e.parse::<u32>().ok().map(|e| 1u64 << e),
        None => s.parse().ok(),
    }
}

/// Parse "b 3-4 A", "b 4 B" or "1".
pub fn parse_cell(text: &str) -> Option<PublishedCell> {
    let parts: Vec<&str> = text.split_whitespace().collect();
    let (lt, range, ut) = match parts.as_slice() {
        [r] => (None, *r, None),
        [l, r, u] => (l.chars().next(), *r, u.chars().next()),
        _ => return None,
    };
    let (lo, hi) = match range.split_once('-') {
        Some((a, b)) => (number(a)?, number(b)?),
        None => (number(range)?, number(range)?),
    };
    Some(PublishedCell { lower_tag: lt, lower: lo, upper: hi, upper_tag: ut })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_all_cells() {
        for &(_, _, _, c) in TABLE_I {
            assert!(parse_cell(c).is_some(), "{c}");
        }
        assert_eq!(
            parse_cell("b 34894-2^17 C").unwrap(),
            PublishedCell { lower_tag: Some('b'), lower: 34894, upper: 131072, upper_tag: Some('C') }
        );
        assert_eq!(parse_cell("1").unwrap().upper, 1);
    }
}

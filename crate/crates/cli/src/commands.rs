use std::fmt::Write as _;

use num_bigint::BigUint;
use rankmetric::bounds::reference::{TABLE_I, TABLE_II};
use rankmetric::bounds::table::{format_cell, linear_dim_bounds};
use rankmetric::bounds::{covering_report, BoundReport};
use rankmetric::codes::construct::gabidulin;
use rankmetric::codes::io::{self, CodeFile};
use rankmetric::ffield::{element_arith, ArithOp, FieldElement};
use rankmetric::oracle::suites::{self, Status, Suite};
use rankmetric::oracle::{
    exhaustive_min_covering, greedy_covering, max_code_search, min_covering_size, Outcome, SearchBudget,
};
use rankmetric::rankgeom::balls::{intersection_by_distance, intersection_volume_closed};
use rankmetric::rankgeom::els::{enumerate_els, support_els};
use rankmetric::rankgeom::kernels::{ball_volume, ball_volume_bounds, rank_count};
use rankmetric::wenum::{moments, RankEnumerator};
use rankmetric::{macwilliams, rank_of, Codebook, Els, Field, LinearCode};
use serde_json::{json, Value};

use crate::args::*;
use crate::error::CliError;
use crate::output::{Csv, Exit, Report};

type Res = Result<Report, CliError>;

pub fn run(cmd: &Command, guard: u64) -> Res {
    match cmd {
        Command::Field(c) => field(c),
        Command::Rank(c) => rank(c),
        Command::Ball(c) => ball(c, guard),
        Command::Els(c) => els(c),
        Command::Code(c) => code(c, guard),
        Command::Gabidulin(c) => gabidulin_cmd(c),
        Command::Bounds(c) => bounds(c),
        Command::Table1(c) => table1(c),
        Command::Table2(c) => table2(c),
        Command::Macwilliams(c) => macwilliams_cmd(c, guard),
        Command::Moments(c) => moments_cmd(c, guard),
        Command::Search(c) => search(c),
        Command::Verify(c) => verify(c),
    }
}

fn make_field(a: &FieldArgs) -> Result<Field, CliError> {
    let modulus = a.modulus.as_deref().map(parse_list::<u32>).transpose()?;
    Ok(Field::new(a.q, a.m, modulus.as_deref())?)
}

fn parse_vec(f: &Field, s: &str) -> Result<Vec<u32>, CliError> {
    let v = parse_list::<u64>(s)?;
    if v.is_empty() {
        return Err(CliError::Usage("empty vector".into()));
    }
    Ok(v.into_iter().map(|x| f.check(x)).collect::<rankmetric::Result<_>>()?)
}

fn read_code(path: &str) -> Result<CodeFile, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.into(), source })?;
    Ok(io::parse(&text)?)
}

fn read_linear(path: &str) -> Result<LinearCode, CliError> {
    match read_code(path)? {
        CodeFile::Linear(c) => Ok(c),
        CodeFile::Book(_) => Err(CliError::Usage(format!("{path}: a linear code is required, not a codebook"))),
    }
}

fn rows_text(rows: &[Vec<u32>]) -> String {
    rows.iter().map(|r| format!("  {}\n", join(r, " "))).collect()
}

fn join<T: ToString>(xs: &[T], sep: &str) -> String {
    xs.iter().map(T::to_string).collect::<Vec<_>>().join(sep)
}

fn tuple<T: ToString>(xs: &[T]) -> String {
    format!("({})", join(xs, ", "))
}

fn field(c: &FieldCmd) -> Res {
    let f = make_field(&c.field)?;
    let basis = f.poly_basis();
    let dual = f.dual_basis(&basis)?;
    let mut j = json!({
        "field": f.descriptor(),
        "q": f.q(),
        "m": f.m(),
        "size": f.size(),
        "modulus": f.modulus(),
        "primitive_element": f.primitive_element(),
        "dual_basis": dual,
    });
    let mut text = format!(
        "field: {}\nsize: {}\nmodulus: {}\nprimitive element: {}\ndual of the polynomial basis: {}\n",
        f.descriptor(),
        f.size(),
        join(f.modulus(), " "),
        f.primitive_element(),
        join(&dual, " ")
    );
    if let (Some(op), Some(a)) = (c.op, c.a) {
        let x = FieldElement::new(&f, a)?;
        let y = FieldElement::new(&f, if op == Op::Pow { 0 } else { c.b.unwrap_or(0) })?;
        let op_arith = match op {
            Op::Add => ArithOp::Add,
            Op::Sub => ArithOp::Sub,
            Op::Mul => ArithOp::Mul,
            Op::Div => ArithOp::Div,
            Op::Pow => ArithOp::Pow(c.b.unwrap_or(1)),
            Op::Inv => ArithOp::Inv,
        };
        if c.b.is_none() && !matches!(op, Op::Inv) {
            return Err(CliError::Usage("--b is required for this operation".into()));
        }
        let r = element_arith(&x, &y, op_arith)?.value();
        j["result"] = json!(r);
        writeln!(text, "result: {r}").unwrap();
    }
    if c.table {
        if f.size() > 64 {
            return Err(CliError::Usage("--table needs a field of at most 64 elements".into()));
        }
        let table: Vec<Vec<u32>> = (0..f.size()).map(|a| (0..f.size()).map(|b| f.mul(a, b)).collect()).collect();
        text.push_str("multiplication table:\n");
        text.push_str(&rows_text(&table));
        j["mul_table"] = json!(table);
    }
    Ok(Report::new(j, text))
}

fn rank(c: &RankCmd) -> Res {
    let f = make_field(&c.field)?;
    let v = parse_vec(&f, &c.vec)?;
    let r = rank_of(&f, &v);
    let rows = f.expand(&v);
    let support = support_els(&f, &v);
    let text = format!("rank: {r}\nexpansion:\n{}support basis:\n{}", rows_text(&rows), rows_text(support.basis()));
    Ok(Report::new(json!({ "rank": r, "expansion": rows, "support_basis": support.basis() }), text))
}

fn ball(c: &BallCmd, guard: u64) -> Res {
    let nr = rank_count(c.q, c.m, c.n, c.r);
    let v = ball_volume(c.q, c.m, c.n, c.r);
    let b = ball_volume_bounds(c.q, c.m, c.n, c.r)?;
    let mut j = json!({
        "rank_count": nr.to_string(),
        "volume": v.to_string(),
        "volume_lower": b.lower.to_string(),
        "volume_upper": b.upper,
        "volume_upper_log_q": b.upper_log,
    });
    let mut text =
        format!("N_r: {nr}\nV_r: {v}\nlower bound: {}\nupper bound: {:.6e} (q^{:.6})\n", b.lower, b.upper, b.upper_log);
    if let (Some(s), Some(e)) = (c.s, c.distance) {
        let (size, method) = match intersection_volume_closed(c.q, c.m, c.n, c.r, s, e) {
            Ok(x) => (x, "closed form"),
            Err(rankmetric::Error::NoClosedForm) => {
                let f = Field::new(c.q, c.m, None)?;
                let x = intersection_by_distance(&f, c.n as usize, c.r as usize, s as usize, e as usize, guard)?;
                (BigUint::from(x), "enumeration")
            }
            Err(err) => return Err(err.into()),
        };
        j["intersection"] = json!({ "s": s, "distance": e, "size": size.to_string(), "method": method });
        writeln!(text, "intersection with B_{s} at distance {e}: {size} ({method})").unwrap();
    }
    Ok(Report::new(j, text))
}

fn els(c: &ElsCmd) -> Res {
    let f = make_field(&c.field)?;
    let list = |es: &[Els]| es.iter().map(|e| e.basis().to_vec()).collect::<Vec<_>>();
    if let Some(v) = &c.vec {
        let v = parse_vec(&f, v)?;
        let e = support_els(&f, &v);
        let text = format!("dimension: {}\nbasis:\n{}", e.dim(), rows_text(e.basis()));
        return Ok(Report::new(json!({ "dimension": e.dim(), "basis": e.basis() }), text));
    }
    let (Some(n), Some(v)) = (c.n, c.dim) else {
        return Err(CliError::Usage("give either --vec or both --n and --dim".into()));
    };
    let es = enumerate_els(f.q(), f.m(), n, v)?;
    let mut text = format!("count: {}\n", es.len());
    for (i, e) in es.iter().enumerate() {
        writeln!(text, "els {i}:").unwrap();
        text.push_str(&rows_text(e.basis()));
    }
    Ok(Report::new(json!({ "count": es.len(), "bases": list(&es) }), text))
}

// a guarded quantity: its value, or why it was skipped
fn guarded<T: Into<Value> + ToString>(r: rankmetric::Result<T>) -> (Value, String) {
    match r {
        Ok(x) => {
            let s = x.to_string();
            (x.into(), s)
        }
        Err(e) => (json!({ "skipped": e.to_string() }), format!("skipped ({e})")),
    }
}

fn code(c: &CodeCmd, guard: u64) -> Res {
    match read_code(&c.code)? {
        CodeFile::Linear(lc) => {
            if c.dual {
                let d = lc.dual();
                let text = io::format_linear(&d);
                return Ok(Report::new(json!({ "dual_generator": d.generator() }), text));
            }
            let (q, m, n, k) = (lc.field().q(), lc.field().m(), lc.n(), lc.k());
            let dist = lc.rank_distribution(guard).map(|d| d.counts);
            let (dist_j, dist_t) = match &dist {
                Ok(d) => (json!(d), tuple(d)),
                Err(e) => (json!({ "skipped": e.to_string() }), format!("skipped ({e})")),
            };
            let dr = lc.min_rank_distance(guard).map(|d| d.unwrap_or(0) as u64);
            let dh = lc.min_hamming_distance(guard).map(|d| d.unwrap_or(0) as u64);
            let mrd = dr.as_ref().ok().map(|&d| k > 0 && n <= m as usize && d as usize == n - k + 1);
            let (dr_j, dr_t) = guarded(dr);
            let (dh_j, dh_t) = guarded(dh);
            let (cr_j, cr_t) = guarded(lc.covering_radius(guard).map(|r| r as u64));
            let j = json!({
                "q": q, "m": m, "n": n, "k": k,
                "rank_distribution": dist_j,
                "min_rank_distance": dr_j,
                "min_hamming_distance": dh_j,
                "covering_radius": cr_j,
                "mrd": mrd,
            });
            let text = format!(
                "code: linear [{n}, {k}] over {}\nrank distribution: {dist_t}\nminimum rank distance: {dr_t}\n\
                 minimum hamming distance: {dh_t}\ncovering radius: {cr_t}\nmrd: {}\n",
                lc.field().descriptor(),
                mrd.map_or("unknown".to_string(), |b| b.to_string())
            );
            Ok(Report::new(j, text))
        }
        CodeFile::Book(b) => {
            if c.dual {
                return Err(CliError::Usage("a codebook has no dual".into()));
            }
            let dist = b.rank_distribution().counts;
            let dr = b.min_rank_distance();
            let (cr_j, cr_t) = guarded(b.covering_radius(guard).map(|r| r as u64));
            let j = json!({
                "size": b.len(),
                "n": b.n(),
                "rank_distribution": dist,
                "min_rank_distance": dr,
                "covering_radius": cr_j,
            });
            let text = format!(
                "code: {} words of length {} over {}\nrank distribution: {}\nminimum rank distance: {}\ncovering radius: {cr_t}\n",
                b.len(),
                b.n(),
                b.field().descriptor(),
                tuple(&dist),
                dr.map_or("none".to_string(), |d| d.to_string())
            );
            Ok(Report::new(j, text))
        }
    }
}

fn gabidulin_cmd(c: &GabidulinCmd) -> Res {
    let f = make_field(&c.field)?;
    let g = match &c.g {
        Some(s) => parse_vec(&f, s)?,
        None => {
            if c.n > f.m() as usize {
                return Err(CliError::Usage(format!("n = {} above m = {}: give --g explicitly", c.n, f.m())));
            }
            f.poly_basis()[..c.n].to_vec()
        }
    };
    let code = gabidulin(&f, &g, c.k, c.a)?;
    Ok(Report::new(json!({ "points": g, "generator": code.generator() }), io::format_linear(&code)))
}

fn big(x: &Option<BigUint>) -> String {
    x.as_ref().map_or(String::new(), BigUint::to_string)
}

fn tag(t: Option<char>) -> String {
    t.map_or(String::new(), String::from)
}

fn report_json(r: &BoundReport) -> Value {
    let lowers: serde_json::Map<String, Value> =
        r.lowers().into_iter().map(|(t, v)| (t.to_string(), json!(v.to_string()))).collect();
    let uppers: serde_json::Map<String, Value> =
        r.uppers().into_iter().map(|(t, v)| (t.to_string(), json!(v.to_string()))).collect();
    json!({
        "m": r.m, "n": r.n, "rho": r.rho,
        "lower": r.best_lower.to_string(), "lower_tag": r.lower_tag.map(String::from),
        "upper": r.best_upper.to_string(), "upper_tag": r.upper_tag.map(String::from),
        "lower_bounds": lowers, "upper_bounds": uppers,
        "near_boundary": r.upper.as_ref().is_some_and(|u| u.near_boundary),
        "cell": format_cell(r),
    })
}

fn triples(
    ms: &str,
    ns: Option<&str>,
    default_n_lo: u32,
    rhos: &str,
    upto_m: bool,
) -> Result<Vec<(u32, u32, u32)>, CliError> {
    let ms = parse_range(ms)?;
    let ns = ns.map(parse_range).transpose()?;
    let rhos = parse_range(rhos)?;
    let mut out = Vec::new();
    for m in ms {
        let n_range = ns.clone().unwrap_or(default_n_lo..=m);
        for n in n_range.filter(|&n| !upto_m || n <= m) {
            out.extend(rhos.clone().filter(|&r| !upto_m || r <= n).map(|r| (m, n, r)));
        }
    }
    Ok(out)
}

fn bounds(c: &BoundsCmd) -> Res {
    const COLUMNS: &[&str] = &[
        "m",
        "n",
        "rho",
        "a",
        "b",
        "c",
        "A",
        "B",
        "C",
        "D",
        "E",
        "lower",
        "lower_tag",
        "upper",
        "upper_tag",
        "near_boundary",
        "error",
    ];
    let cells = triples(&c.m, Some(&c.n), 1, &c.rho, false)?;
    let mut rows = Vec::new();
    let mut js = Vec::new();
    let mut text = String::new();
    for (m, n, rho) in cells {
        match covering_report(c.q, m, n, rho) {
            Ok(r) => {
                let (l, u) = (r.lower.as_ref(), r.upper.as_ref());
                rows.push(vec![
                    m.to_string(),
                    n.to_string(),
                    rho.to_string(),
                    l.map_or(String::new(), |l| l.sphere_covering.to_string()),
                    l.map_or(String::new(), |l| big(&l.cohen)),
                    l.map_or(String::new(), |l| big(&l.excess)),
                    u.map_or(String::new(), |u| u.trivial.to_string()),
                    u.map_or(String::new(), |u| u.mrd_embed.to_string()),
                    u.map_or(String::new(), |u| big(&u.mixed)),
                    u.map_or(String::new(), |u| u.probabilistic.to_string()),
                    u.map_or(String::new(), |u| u.jsl.to_string()),
                    r.best_lower.to_string(),
                    tag(r.lower_tag),
                    r.best_upper.to_string(),
                    tag(r.upper_tag),
                    u.is_some_and(|u| u.near_boundary).to_string(),
                    String::new(),
                ]);
                let all: Vec<String> = r.lowers().iter().chain(&r.uppers()).map(|(t, v)| format!("{t}={v}")).collect();
                writeln!(text, "({m},{n},{rho}): {}  [{}]", format_cell(&r), all.join(" ")).unwrap();
                js.push(report_json(&r));
            }
            Err(e) => {
                let mut row = vec![m.to_string(), n.to_string(), rho.to_string()];
                row.resize(COLUMNS.len() - 1, String::new());
                row.push(e.to_string());
                rows.push(row);
                writeln!(text, "({m},{n},{rho}): error: {e}").unwrap();
                js.push(json!({ "m": m, "n": n, "rho": rho, "error": e.to_string() }));
            }
        }
    }
    Ok(Report::new(json!(js), text).with_csv(Csv { kind: "bounds", version: 1, columns: COLUMNS, rows }))
}

fn published_i(m: u32, n: u32, rho: u32) -> Option<&'static str> {
    TABLE_I.iter().find(|&&(a, b, c, _)| (a, b, c) == (m, n, rho)).map(|t| t.3)
}

fn table1(c: &Table1Cmd) -> Res {
    const COLUMNS: &[&str] =
        &["m", "n", "rho", "lower_tag", "lower", "upper", "upper_tag", "cell", "published", "error"];
    let cells = triples(&c.m, c.n.as_deref(), 2, &c.rho, true)?;
    let mut rows = Vec::new();
    let mut js = Vec::new();
    let mut text = String::new();
    for (m, n, rho) in cells {
        let published = if c.q == 2 { published_i(m, n, rho) } else { None };
        match covering_report(c.q, m, n, rho) {
            Ok(r) => {
                let cell = format_cell(&r);
                rows.push(vec![
                    m.to_string(),
                    n.to_string(),
                    rho.to_string(),
                    tag(r.lower_tag),
                    r.best_lower.to_string(),
                    r.best_upper.to_string(),
                    tag(r.upper_tag),
                    cell.clone(),
                    published.unwrap_or("").to_string(),
                    String::new(),
                ]);
                writeln!(text, "({m},{n},{rho}): {cell}").unwrap();
                let mut j = report_json(&r);
                j["published"] = json!(published);
                js.push(j);
            }
            Err(e) => {
                let mut row = vec![m.to_string(), n.to_string(), rho.to_string()];
                row.resize(COLUMNS.len() - 1, String::new());
                row.push(e.to_string());
                rows.push(row);
                writeln!(text, "({m},{n},{rho}): error: {e}").unwrap();
                js.push(json!({ "m": m, "n": n, "rho": rho, "error": e.to_string() }));
            }
        }
    }
    Ok(Report::new(json!(js), text).with_csv(Csv { kind: "table1", version: 1, columns: COLUMNS, rows }))
}

fn table2(c: &Table2Cmd) -> Res {
    const COLUMNS: &[&str] = &["m", "n", "rho", "k_lower", "k_upper", "published_lower", "published_upper", "error"];
    let cells = triples(&c.m, c.n.as_deref(), 4, &c.rho, true)?;
    let mut rows = Vec::new();
    let mut js = Vec::new();
    let mut text = String::new();
    for (m, n, rho) in cells {
        let published = TABLE_II.iter().find(|t| (t.0, t.1, t.2) == (m, n, rho) && c.q == 2).map(|t| (t.3, t.4));
        let (p_lo, p_hi) = published.map_or((String::new(), String::new()), |(a, b)| (a.to_string(), b.to_string()));
        match linear_dim_bounds(c.q, m, n, rho) {
            Ok((lo, hi)) => {
                rows.push(vec![
                    m.to_string(),
                    n.to_string(),
                    rho.to_string(),
                    lo.to_string(),
                    hi.to_string(),
                    p_lo,
                    p_hi,
                    String::new(),
                ]);
                writeln!(text, "({m},{n},{rho}): {lo}-{hi}").unwrap();
                js.push(json!({ "m": m, "n": n, "rho": rho, "k_lower": lo, "k_upper": hi, "published": published }));
            }
            Err(e) => {
                rows.push(vec![
                    m.to_string(),
                    n.to_string(),
                    rho.to_string(),
                    String::new(),
                    String::new(),
                    p_lo,
                    p_hi,
                    e.to_string(),
                ]);
                writeln!(text, "({m},{n},{rho}): error: {e}").unwrap();
                js.push(json!({ "m": m, "n": n, "rho": rho, "error": e.to_string() }));
            }
        }
    }
    Ok(Report::new(json!(js), text).with_csv(Csv { kind: "table2", version: 1, columns: COLUMNS, rows }))
}

fn enumerator_of(c: &LinearCode, guard: u64) -> Result<RankEnumerator, CliError> {
    let f = c.field();
    Ok(RankEnumerator::from_counts(f.q(), f.m(), &c.rank_distribution(guard)?.counts)?)
}

fn macwilliams_cmd(c: &MacwilliamsCmd, guard: u64) -> Res {
    let (a, brute) = match (&c.code, &c.counts) {
        (Some(path), _) => {
            let lc = read_linear(path)?;
            (enumerator_of(&lc, guard)?, Some(enumerator_of(&lc.dual(), guard)?))
        }
        (None, Some(counts)) => {
            let (q, m) = (c.q.expect("clap requires q"), c.m.expect("clap requires m"));
            (RankEnumerator::from_counts(q, m, &parse_list::<u64>(counts)?)?, None)
        }
        (None, None) => return Err(CliError::Usage("give --code or --counts".into())),
    };
    let b = macwilliams(&a)?;
    let agrees = brute.as_ref().map(|d| *d == b);
    let mut text = format!("A = {a}\nB = {b}\n");
    if let Some(ok) = agrees {
        writeln!(text, "dual counted directly: {}", if ok { "agrees" } else { "DISAGREES" }).unwrap();
    }
    let strs = |e: &RankEnumerator| e.coeffs().iter().map(|x| x.to_string()).collect::<Vec<_>>();
    let j = json!({ "a": strs(&a), "b": strs(&b), "brute_force_agrees": agrees });
    let exit = if agrees == Some(false) { Exit::Verification } else { Exit::Ok };
    Ok(Report::new(j, text).with_exit(exit))
}

fn moments_cmd(c: &MomentsCmd, guard: u64) -> Res {
    let lc = read_linear(&c.code)?;
    let a = enumerator_of(&lc, guard)?;
    let b = enumerator_of(&lc.dual(), guard)?;
    let n = lc.n() as u32;
    let nus: Vec<u32> = match c.nu {
        Some(nu) => vec![nu],
        None => (0..=n).collect(),
    };
    let mut text = String::new();
    let mut js = Vec::new();
    let mut all = true;
    for nu in nus {
        let mo = moments(&a, &b, nu)?;
        all &= mo.holds();
        writeln!(
            text,
            "nu={nu}: first {} = {}, second {} = {}{}: {}",
            mo.lhs_37,
            mo.rhs_37,
            mo.lhs_38,
            mo.rhs_38,
            mo.reduced.as_ref().map_or(String::new(), |(r1, r2)| format!(", reduced {r1} and {r2}")),
            if mo.holds() { "holds" } else { "FAILS" }
        )
        .unwrap();
        js.push(json!({
            "nu": nu,
            "first": [mo.lhs_37.to_string(), mo.rhs_37.to_string()],
            "second": [mo.lhs_38.to_string(), mo.rhs_38.to_string()],
            "reduced": mo.reduced.as_ref().map(|(x, y)| [x.to_string(), y.to_string()]),
            "holds": mo.holds(),
        }));
    }
    let exit = if all { Exit::Ok } else { Exit::Verification };
    Ok(Report::new(json!(js), text).with_exit(exit))
}

fn witness(summary: &str, book: Option<&Codebook>) -> (String, Value) {
    let mut text = format!("# {summary}\n");
    if let Some(b) = book {
        text.push_str(&io::format_codebook(b));
    }
    (text, json!({ "summary": summary, "witness": book.map(|b| b.words().to_vec()) }))
}

fn search(c: &SearchCmd) -> Res {
    let f = make_field(&c.field)?;
    let budget = SearchBudget { max_nodes: c.budget, seed: c.seed, ..SearchBudget::default() };
    let (summary, book, exit) = match c.kind {
        SearchKind::Packing => {
            let d = c.d.expect("clap requires d");
            match max_code_search(&f, c.n, d, &budget)? {
                Outcome::Done(b) => {
                    (format!("largest code with d >= {d}: {} words (exact)", b.len()), Some(b), Exit::Ok)
                }
                Outcome::Inconclusive { nodes } => {
                    (format!("inconclusive after {nodes} nodes"), None, Exit::Inconclusive)
                }
            }
        }
        SearchKind::Greedy => {
            let rho = c.rho.expect("clap requires rho");
            let b = greedy_covering(&f, c.n, rho, &budget)?;
            (format!("greedy covering of radius {rho}: {} words", b.len()), Some(b), Exit::Ok)
        }
        SearchKind::Covering => {
            let rho = c.rho.expect("clap requires rho");
            match c.size {
                Some(k) => match exhaustive_min_covering(&f, c.n, rho, k, &budget)? {
                    Outcome::Done(Some(b)) => {
                        (format!("a covering of radius {rho} with {k} words exists"), Some(b), Exit::Ok)
                    }
                    Outcome::Done(None) => (format!("no covering of radius {rho} with {k} words"), None, Exit::Ok),
                    Outcome::Inconclusive { nodes } => {
                        (format!("inconclusive after {nodes} nodes"), None, Exit::Inconclusive)
                    }
                },
                None => {
                    let greedy = greedy_covering(&f, c.n, rho, &budget)?;
                    let lo = covering_report(f.q(), f.m(), c.n as u32, rho as u32)?
                        .best_lower
                        .to_string()
                        .parse::<usize>()
                        .unwrap_or(usize::MAX)
                        .max(1);
                    let hi = greedy.len().saturating_sub(1);
                    match min_covering_size(&f, c.n, rho, lo, hi, &budget)? {
                        Outcome::Done(Some((k, b))) => (format!("K_R = {k} (exact)"), Some(b), Exit::Ok),
                        Outcome::Done(None) => {
                            (format!("K_R = {} (exact, greedy is optimal)", greedy.len()), Some(greedy), Exit::Ok)
                        }
                        Outcome::Inconclusive { nodes } => (
                            format!("K_R <= {} (greedy); smaller sizes inconclusive after {nodes} nodes", greedy.len()),
                            Some(greedy),
                            Exit::Inconclusive,
                        ),
                    }
                }
            }
        }
    };
    let (text, j) = witness(&summary, book.as_ref());
    Ok(Report::new(j, text).with_exit(exit))
}

fn verify(c: &VerifyCmd) -> Res {
    let suite = Suite::parse(&c.suite).ok_or_else(|| {
        CliError::Usage(format!("unknown suite {:?}; expected one of {}", c.suite, Suite::NAMES.join(", ")))
    })?;
    let budget = SearchBudget { max_nodes: c.budget, seed: c.seed, ..SearchBudget::default() };
    let checks = suites::run(suite, &budget);
    let mut text = String::new();
    for ch in &checks {
        writeln!(text, "{} {}: {}", ch.status, ch.name, ch.detail).unwrap();
        if c.verbose || ch.status != Status::Pass {
            for w in &ch.warnings {
                writeln!(text, "  warning: {w}").unwrap();
            }
            for f in &ch.failures {
                writeln!(text, "  failure: {f}").unwrap();
            }
        }
    }
    let count = |s: Status| checks.iter().filter(|c| c.status == s).count();
    let (pass, fail, inconclusive) = (count(Status::Pass), count(Status::Fail), count(Status::Inconclusive));
    writeln!(text, "{pass} of {} passed", checks.len()).unwrap();
    let exit = if fail > 0 {
        Exit::Verification
    } else if inconclusive > 0 {
        Exit::Inconclusive
    } else {
        Exit::Ok
    };
    let js: Vec<Value> = checks
        .iter()
        .map(|c| json!({ "name": c.name, "status": c.status, "detail": c.detail, "warnings": c.warnings, "failures": c.failures }))
        .collect();
    Ok(Report::new(json!({ "checks": js, "passed": pass, "failed": fail, "inconclusive": inconclusive }), text)
        .with_exit(exit))
}

use autfree::autlie::{
    assoc_a, assoc_words, gamma_span_with, k_basic, k_chain_expr, l_gen_expr, sigma, trace_image_basis_with,
    transvection_t, transvection_words, vectorize, verify_counterexample, AutExpr, DerivationVector,
};
use autfree::fox::{bglm_test, fox_derivative_word, jacobian, jacobian_trace, EndomorphismWords, SeriesMatrix};
use autfree::freegroup::{lcs_degree, magnus_ring, GroupWord, LcsDegree};
use autfree::lie::{lyndon_basis, witt_rank, LyndonWord};
use autfree::parse::parse_word;
use autfree::repr::{decompose, dim_j, dim_m, dim_t, j_shapes, r2_multiplicities, t_shapes, theorem2_rank, Module};
use autfree::verify::{run_suite, VerifyConfig};
use autfree::{Error, Parallelism};
use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::report::{int, markdown_table, strings, text_table, Report};
use crate::{Cli, Command, GenType, Quantity, Which};

pub enum Failure {
    Usage(String),
    Math(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Math(e)
    }
}

type Outcome = Result<(Report, bool), Failure>;

fn ok(r: Report) -> Outcome {
    Ok((r, true))
}

pub fn run(cli: &Cli, par: Parallelism) -> Outcome {
    match &cli.command {
        Command::Witt(rd) => {
            let v = witt_rank(rd.rank, rd.degree);
            ok(Report::new("witt", json!({"rank": rd.rank, "degree": rd.degree, "value": int(&v)})).text(v.to_string()))
        }
        Command::Lyndon { rd, as_series, as_word } => lyndon(rd.rank as usize, rd.degree as usize, *as_series, *as_word),
        Command::Fox { word, wrt, rank, truncate } => fox(word, *wrt as usize, *rank, *truncate),
        Command::Jacobian { map, rank, reduced, truncate, degree } => {
            jacobian_cmd(map, *rank, *reduced, *truncate, *degree)
        }
        Command::Trace { map, rank, degree, truncate } => {
            let phi = EndomorphismWords::parse(map, *rank)?;
            let n = *degree as usize;
            let trunc = truncate.unwrap_or(n + 2);
            let t = jacobian_trace(&phi, n, trunc)?;
            let balanced = t.is_cyclically_balanced(n)?;
            let data = json!({
                "map": phi.to_string(), "degree": n, "truncation": trunc,
                "trace": t.to_string(), "balanced": balanced,
            });
            ok(Report::new("trace", data))
        }
        Command::Bglm { map, rank, degree } => {
            let phi = EndomorphismWords::parse(map, *rank)?;
            let n = *degree as usize;
            let passes = bglm_test(&phi, n)?;
            ok(Report::new("bglm", json!({"map": phi.to_string(), "degree": n, "balanced": passes})))
        }
        Command::Generator { kind, rank, i, j, k, omega, word } => generator(*kind, *rank, *i, *j, *k, omega, word),
        Command::SpanRank { rd, trace_image } => span_rank(rd.rank as usize, rd.degree as usize, *trace_image, par),
        Command::Counterexample => counterexample(),
        Command::Dims { rank, max_degree, table } => dims(*rank as usize, *max_degree as usize, *table),
        Command::Decompose { rd, module, allow_conjectural } => {
            let m = match module {
                Quantity::J => Module::J,
                Quantity::M => Module::M,
                Quantity::T => Module::T,
                Quantity::L => Module::L,
            };
            let rep = decompose(rd.rank as usize, rd.degree as usize, m, *allow_conjectural)?;
            let entries: Vec<Value> = rep
                .entries
                .iter()
                .map(|e| {
                    json!({
                        "shape": e.shape.to_string(),
                        "part": e.part.map(|p| format!("{p:?}")),
                        "inflated_from": e.inflated_from.as_ref().map(|p| p.to_string()),
                        "multiplicity": e.multiplicity,
                        "dimension": int(&e.dimension),
                    })
                })
                .collect();
            let mut rows = vec![strings(["shape", "part", "multiplicity", "dimension"])];
            for e in &rep.entries {
                rows.push(vec![
                    format!("({})", e.shape),
                    e.part.map(|p| format!("{p:?}")).unwrap_or_default(),
                    e.multiplicity.to_string(),
                    e.dimension.to_string(),
                ]);
            }
            let mut text = text_table(&rows);
            text.push_str(&format!("total {}\n", rep.total));
            for n in &rep.notes {
                text.push_str(&format!("note: {n}\n"));
            }
            let data = json!({
                "rank": rep.rank, "degree": rep.degree, "module": rep.module,
                "entries": entries, "total": int(&rep.total), "notes": rep.notes,
            });
            ok(Report::new("decompose", data).text(text).markdown(markdown_table(&rows, false)).csv(rows))
        }
        Command::Tables { which } => tables(*which),
        Command::Verify { suite } => {
            let cfg = VerifyConfig { seed: cli.seed, par };
            let outcomes = run_suite(*suite, &cfg);
            let failed = outcomes.iter().filter(|o| !o.passed).count();
            let mut text = String::new();
            let mut rows = vec![strings(["criterion", "name", "passed", "detail"])];
            for o in &outcomes {
                let tag = if o.passed { "PASS" } else { "FAIL" };
                text.push_str(&format!("[{tag}] C{} {}: {}\n", o.id, o.name, o.detail));
                rows.push(vec![format!("C{}", o.id), o.name.to_string(), o.passed.to_string(), o.detail.clone()]);
            }
            text.push_str(&format!("{} passed, {} failed\n", outcomes.len() - failed, failed));
            let list: Vec<Value> = outcomes
                .iter()
                .map(|o| json!({"criterion": o.id, "name": o.name, "passed": o.passed, "detail": o.detail}))
                .collect();
            let data = json!({
                "suite": suite.name(), "seed": cli.seed, "outcomes": list,
                "passed": outcomes.len() - failed, "failed": failed,
            });
            let report = Report::new("verify", data).text(text).markdown(markdown_table(&rows, false)).csv(rows);
            Ok((report, failed == 0))
        }
    }
}

fn bracketing(w: &LyndonWord) -> String {
    match w.standard_factorization() {
        Some((u, v)) => format!("[{},{}]", bracketing(&u), bracketing(&v)),
        None => format!("X{}", w.letters()[0]),
    }
}

fn lyndon(r: usize, n: usize, as_series: bool, as_word: bool) -> Outcome {
    let mut words = Vec::new();
    let mut rows = vec![strings(["word", "bracket"])];
    if as_series {
        rows[0].push("series".into());
    }
    if as_word {
        rows[0].push("group_word".into());
    }
    for w in lyndon_basis(r, n) {
        let mut entry = json!({"word": w.to_string(), "bracket": bracketing(&w)});
        let mut row = vec![w.to_string(), bracketing(&w)];
        if as_series {
            let s = w.bracket_series(r, n)?.to_string();
            entry["series"] = s.clone().into();
            row.push(s);
        }
        if as_word {
            let g = w.bracket_word(r)?.to_string();
            entry["group_word"] = g.clone().into();
            row.push(g);
        }
        words.push(entry);
        rows.push(row);
    }
    let text = rows[1..].iter().map(|r| r.join("  ") + "\n").collect::<String>();
    let data = json!({"rank": r, "degree": n, "count": words.len(), "words": words});
    ok(Report::new("lyndon", data).text(text).markdown(markdown_table(&rows, false)).csv(rows))
}

fn fox(word: &str, i: usize, rank: Option<usize>, truncate: Option<usize>) -> Outcome {
    let w = parse_word(word, rank)?;
    let d = fox_derivative_word(&w, i)?;
    let mut data = json!({"word": w.to_string(), "rank": w.rank(), "wrt": i, "derivative": d.to_string()});
    if let Some(t) = truncate {
        data["truncation"] = t.into();
        data["magnus"] = magnus_ring(&d, t).to_string().into();
    }
    ok(Report::new("fox", data))
}

fn matrix_entries(m: &SeriesMatrix) -> (Vec<Value>, Vec<Vec<String>>) {
    let mut list = Vec::new();
    let mut rows = vec![strings(["i", "j", "entry"])];
    for (i, j, s) in m.nonzero_entries() {
        list.push(json!({"i": i, "j": j, "entry": s.to_string()}));
        rows.push(vec![i.to_string(), j.to_string(), s.to_string()]);
    }
    (list, rows)
}

fn entries_text(rows: &[Vec<String>]) -> String {
    rows[1..].iter().map(|r| format!("({},{}): {}\n", r[0], r[1], r[2])).collect()
}

fn jacobian_cmd(
    map: &str,
    rank: Option<usize>,
    reduced: bool,
    truncate: Option<usize>,
    degree: Option<usize>,
) -> Outcome {
    let phi = EndomorphismWords::parse(map, rank)?;
    let d = jacobian(&phi)?;
    if !reduced {
        let r = phi.rank();
        let mut list = Vec::new();
        let mut rows = vec![strings(["i", "j", "entry"])];
        for i in 1..=r {
            for j in 1..=r {
                let e = d.get(i, j).to_string();
                list.push(json!({"i": i, "j": j, "entry": e}));
                rows.push(vec![i.to_string(), j.to_string(), e]);
            }
        }
        let data = json!({"map": phi.to_string(), "reduced": false, "entries": list});
        let text = entries_text(&rows);
        return ok(Report::new("jacobian", data).text(text).markdown(markdown_table(&rows, false)).csv(rows));
    }
    let trunc = match (truncate, degree) {
        (Some(t), _) => t,
        (None, Some(n)) => n + 2,
        (None, None) => return Err(Failure::Usage("--reduced needs --truncate or --degree".into())),
    };
    let mut m = d.reduced(trunc);
    if let Some(n) = degree {
        m = m.graded_part(n)?;
    }
    let (list, rows) = matrix_entries(&m);
    let data = json!({
        "map": phi.to_string(), "reduced": true, "truncation": trunc, "degree": degree, "entries": list,
    });
    let text = entries_text(&rows);
    ok(Report::new("jacobian", data).text(text).markdown(markdown_table(&rows, false)).csv(rows))
}

fn need(v: Option<usize>, flag: &str, kind: &str) -> Result<usize, Failure> {
    v.ok_or_else(|| Failure::Usage(format!("--type {kind} needs --{flag}")))
}

fn generator(
    kind: GenType,
    r: usize,
    i: Option<usize>,
    j: Option<usize>,
    k: Option<usize>,
    omega: &[usize],
    word: &[String],
) -> Outcome {
    let from_expr = |e: AutExpr, n: usize| -> Result<(EndomorphismWords, usize, DerivationVector), Error> {
        let dv = sigma(&e.jet(n + 1)?, n)?;
        Ok((e.words()?, n, dv))
    };
    let (name, (images, n, dv)) = match kind {
        GenType::K => {
            let (i, j, k) = (need(i, "i", "K")?, need(j, "j", "K")?, need(k, "k", "K")?);
            (format!("K_{{{i},{j},{k}}}"), from_expr(k_basic(r, i, j, k)?, 1)?)
        }
        GenType::Kchain => {
            let (i, j) = (need(i, "i", "Kchain")?, need(j, "j", "Kchain")?);
            if omega.is_empty() {
                return Err(Failure::Usage("--type Kchain needs --omega".into()));
            }
            let name = format!("K_{{{i},{},{j}}}", strings(omega).join(""));
            (name, from_expr(k_chain_expr(r, i, omega, j)?, omega.len())?)
        }
        GenType::L => {
            let (i, j, k) = (need(i, "i", "L")?, need(j, "j", "L")?, need(k, "k", "L")?);
            if omega.is_empty() {
                return Err(Failure::Usage("--type L needs --omega".into()));
            }
            let name = format!("L_{{{i},{},{j},{k}}}", strings(omega).join(""));
            (name, from_expr(l_gen_expr(r, i, omega, j, k)?, omega.len() + 1)?)
        }
        GenType::T => {
            let [w] = word else {
                return Err(Failure::Usage("--type T needs exactly one --word".into()));
            };
            let w = parse_word(w, Some(r))?;
            let n = match lcs_degree(&w, autfree::series::MAX_DEGREE) {
                LcsDegree::Exact(d) if d >= 2 => d - 1,
                d => return Err(Error::Precondition(format!("{w} has lower central degree {d}, need 2 or more")).into()),
            };
            (format!("T_{w}"), (transvection_words(&w)?, n, transvection_t(&w, n, n + 2)?))
        }
        GenType::A => {
            if word.is_empty() {
                return Err(Failure::Usage("--type A needs at least one --word".into()));
            }
            let a: Vec<GroupWord> = word.iter().map(|s| parse_word(s, Some(r))).collect::<Result<_, _>>()?;
            let n = a.len();
            let name = format!("A_{{{}}}", strings(&a).join(","));
            (name, (assoc_words(r, &a)?, n, assoc_a(r, &a, n + 2)?))
        }
    };
    let (list, rows) = matrix_entries(&dv.jacobian_class());
    let trace = dv.trace();
    let imgs: Vec<String> = images.images().iter().map(|w| w.to_string()).collect();
    let mut text = format!("{name}, degree {n}\n");
    for (k, w) in imgs.iter().enumerate() {
        text.push_str(&format!("x{} -> {w}\n", k + 1));
    }
    text.push_str("class Jacobian:\n");
    text.push_str(&entries_text(&rows));
    text.push_str(&format!("trace: {trace}\n"));
    let data = json!({
        "generator": name, "rank": r, "degree": n, "images": imgs,
        "jacobian": list, "trace": trace.to_string(),
    });
    ok(Report::new("generator", data).text(text).markdown(markdown_table(&rows, false)).csv(rows))
}

fn span_rank(r: usize, n: usize, trace_image: bool, par: Parallelism) -> Outcome {
    let s = gamma_span_with(r, n, par)?;
    let indices: Vec<usize> = s.basis.iter().filter_map(|v| vectorize(v).leading().map(|(k, _)| *k)).collect();
    let mut data = json!({
        "rank": r, "degree": n, "span_rank": s.rank, "level_ranks": s.level_ranks, "basis_indices": indices,
    });
    if trace_image {
        let t = trace_image_basis_with(r, n, par)?;
        data["trace_image_dim"] = t.trace_image_dim.into();
        data["balanced_dim"] = t.balanced_dim.into();
        data["all_traces_balanced"] = t.all_traces_balanced.into();
        data["all_balanced_hit"] = t.all_balanced_hit.into();
    }
    ok(Report::new("span-rank", data))
}

fn counterexample() -> Outcome {
    let c = verify_counterexample()?;
    let data = json!({
        "map": c.map, "degree": c.degree,
        "trace": c.trace.to_string(), "printed_trace": c.printed_trace.to_string(),
        "trace_matches_printed": c.trace_matches_printed,
        "balanced": c.balanced, "printed_trace_balanced": c.printed_trace_balanced,
        "inner_span_rank": c.inner_span_rank, "augmented_rank": c.augmented_rank,
        "in_inner_span": c.in_inner_span,
        "l_rank": c.bracket_span_rank, "in_l": c.in_bracket_span,
    });
    ok(Report::new("counterexample", data))
}

/// Rows in the order of the published r = 3, 4 tables.
const QUANTITIES: [(Quantity, &str); 4] =
    [(Quantity::M, "M"), (Quantity::L, "L"), (Quantity::T, "T"), (Quantity::J, "J")];

fn dim_of(q: Quantity, r: usize, n: usize) -> Result<BigInt, Error> {
    Ok(match q {
        Quantity::J => dim_j(r, n),
        Quantity::M => dim_m(r, n),
        Quantity::T => dim_t(r, n),
        Quantity::L if n == 1 => dim_m(r, 1),
        Quantity::L => theorem2_rank(r as u64, n as u64)?,
    })
}

struct DimRows {
    data: Value,
    grid: Vec<Vec<String>>,
    long: Vec<Vec<String>>,
}

fn dim_rows(r: usize, max: usize, only: Option<Quantity>) -> Result<DimRows, Error> {
    let mut grid = vec![std::iter::once("n".to_string()).chain((1..=max).map(|n| n.to_string())).collect()];
    let mut long = vec![strings(["n", "quantity", "value"])];
    let mut rows = Vec::new();
    let mut values = Vec::new();
    for (q, label) in QUANTITIES.iter().filter(|(q, _)| only.map_or(true, |o| o == *q)) {
        let v: Vec<BigInt> = (1..=max).map(|n| dim_of(*q, r, n)).collect::<Result<_, _>>()?;
        grid.push(std::iter::once(format!("dim {label}_n")).chain(strings(&v)).collect());
        rows.push(json!({"quantity": label, "values": v.iter().map(int).collect::<Vec<_>>()}));
        values.push((label, v));
    }
    for n in 1..=max {
        for (label, v) in &values {
            long.push(vec![n.to_string(), label.to_string(), v[n - 1].to_string()]);
        }
    }
    Ok(DimRows { data: json!({"rank": r, "max_degree": max, "rows": rows}), grid, long })
}

fn dims(r: usize, max: usize, only: Option<Quantity>) -> Outcome {
    let d = dim_rows(r, max, only)?;
    ok(Report::new("dims", d.data).text(text_table(&d.grid)).markdown(markdown_table(&d.grid, true)).csv(d.long))
}

fn shape_list<'a>(shapes: impl Iterator<Item = (String, u128)> + 'a) -> String {
    shapes.map(|(s, m)| if m == 1 { format!("({s})") } else { format!("{m}x({s})") }).collect::<Vec<_>>().join(" ")
}

fn tables(which: Which) -> Outcome {
    match which {
        Which::R2 => r2_tables(),
        Which::R3 | Which::R4 => {
            let r = if which == Which::R3 { 3 } else { 4 };
            let max = 6;
            let mut d = dim_rows(r, max, None)?;
            let mut shapes = Vec::new();
            let mut t_row = vec!["T_n".to_string()];
            let mut j_row = vec!["J_n".to_string()];
            for n in 1..=max {
                let t: Vec<(String, u128)> = t_shapes(r, n).into_iter().map(|(l, _, m)| (l.to_string(), m)).collect();
                let j: Vec<(String, u128)> = j_shapes(r, n).into_iter().map(|(l, m)| (l.to_string(), m)).collect();
                t_row.push(shape_list(t.iter().cloned()));
                j_row.push(shape_list(j.iter().cloned()));
                let entry = |v: &[(String, u128)]| {
                    v.iter().map(|(s, m)| json!({"shape": s, "multiplicity": int(m)})).collect::<Vec<_>>()
                };
                shapes.push(json!({"n": n, "T": entry(&t), "J": entry(&j)}));
            }
            for n in 1..=max {
                d.long.push(vec![n.to_string(), "T shapes".into(), t_row[n].clone()]);
                d.long.push(vec![n.to_string(), "J shapes".into(), j_row[n].clone()]);
            }
            d.grid.push(t_row);
            d.grid.push(j_row);
            d.data["shapes"] = shapes.into();
            ok(Report::new("tables", d.data).text(text_table(&d.grid)).markdown(markdown_table(&d.grid, true)).csv(d.long))
        }
    }
}

fn r2_tables() -> Outcome {
    let max = 12;
    let rows: Vec<_> = (1..=max).map(r2_multiplicities).collect();
    let head: Vec<String> = std::iter::once("shape".to_string()).chain((1..=max).map(|n| n.to_string())).collect();
    let mut long = vec![strings(["n", "quantity", "value"])];
    let mut md = String::new();
    let mut text = String::new();
    let mut data = serde_json::Map::new();
    data.insert("rank".into(), 2.into());
    data.insert("max_degree".into(), max.into());
    for (label, pick) in [("J", 0usize), ("M", 1usize)] {
        let get = |row: &autfree::repr::R2Row, b: usize| -> u64 {
            row.cells.iter().find(|c| c.b == b).map_or(0, |c| if pick == 0 { c.j } else { c.m })
        };
        let mut grid = vec![head.clone()];
        for b in 0..=6 {
            let mut line = vec![if b == 0 { "(n,0)".to_string() } else { format!("(n-{b},{b})") }];
            for row in &rows {
                let v = get(row, b);
                line.push(if v == 0 { String::new() } else { v.to_string() });
                if v != 0 {
                    long.push(vec![row.n.to_string(), format!("{label} (n-{b},{b})"), v.to_string()]);
                }
            }
            grid.push(line);
        }
        let totals: Vec<u64> = rows.iter().map(|r| if pick == 0 { r.j_total } else { r.m_total }).collect();
        grid.push(std::iter::once("total".to_string()).chain(strings(&totals)).collect());
        for r in &rows {
            long.push(vec![r.n.to_string(), format!("{label} total"), (if pick == 0 { r.j_total } else { r.m_total }).to_string()]);
        }
        md.push_str(&format!("**{label}_n**\n\n{}\n", markdown_table(&grid, true)));
        text.push_str(&format!("{label}_n\n{}\n", text_table(&grid)));
        let cols: Vec<Value> = rows
            .iter()
            .map(|r| {
                let m: Vec<Value> = (0..=6)
                    .filter_map(|b| {
                        let v = get(r, b);
                        (v != 0).then(|| json!({"shape": format!("{},{}", r.n - b, b), "multiplicity": v}))
                    })
                    .collect();
                json!({"n": r.n, "multiplicities": m, "total": if pick == 0 { r.j_total } else { r.m_total }})
            })
            .collect();
        data.insert(label.into(), cols.into());
    }
    ok(Report::new("tables", Value::Object(data)).text(text).markdown(md).csv(long))
}

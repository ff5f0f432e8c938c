use std::fmt::Write as _;
use std::fs::File;
use std::io::{BufReader, BufWriter};
use std::path::Path;

use anyhow::{Context, Result};
use relalg::alt_repr::{cayley_repr, roots_of_unity_repr, verify_multiplicative, MultiplicativeRepresentation};
use relalg::cond_dist::{build_conditional, psi as psi_embedding, CountTable};
use relalg::group::{is_abelian, is_group, iso_to_cyclic, order as relation_order, DEFAULT_CLOSURE_CAP};
use relalg::vector_repr::{fit_embedding, theorem1_certificate, well_represented_with, CertificateVerdict, Comparison};
use relalg::{generate_closure_with_cap, Embedding, MonoidClosure, OrderResult, RelationExpr, RelationSpec};
use serde_json::json;

use crate::{ModeArg, Outcome, ReprKind};

pub const CLOSURE_CAP_VAR: &str = "RELALG_MAX_CLOSURE";

fn load_spec(path: &Path) -> Result<RelationSpec> {
    RelationSpec::load(path).with_context(|| format!("reading relation spec {}", path.display()))
}

pub fn closure_cap() -> Result<usize> {
    match std::env::var(CLOSURE_CAP_VAR) {
        Ok(v) => v.trim().parse().with_context(|| format!("{CLOSURE_CAP_VAR}={v:?} is not a count")),
        Err(_) => Ok(DEFAULT_CLOSURE_CAP),
    }
}

fn closure_of(spec: &RelationSpec, generators: &[String]) -> Result<MonoidClosure> {
    let gens = generators
        .iter()
        .map(|name| Ok((name.clone(), spec.get(name)?.clone())))
        .collect::<Result<Vec<_>>>()?;
    Ok(generate_closure_with_cap(&gens, closure_cap()?)?)
}

/// Formats a number exactly as it appears in the JSON report.
pub fn num(x: f64) -> String {
    serde_json::Value::from(x).to_string()
}

fn order_json(o: &OrderResult) -> serde_json::Value {
    serde_json::to_value(o).expect("order serializes")
}

pub fn eval(spec_path: &Path, text: &str) -> Result<Outcome> {
    let spec = load_spec(spec_path)?;
    let expr = RelationExpr::parse(text)?;
    let r = expr.eval(&spec.universe, &spec.relations)?;
    let pairs = r.word_pairs();
    let mut out = String::new();
    for (a, b) in &pairs {
        writeln!(out, "{a} {b}")?;
    }
    Ok(Outcome {
        json: json!({ "expr": expr.to_string(), "count": pairs.len(), "pairs": pairs }),
        text: out,
        passed: true,
    })
}

pub fn order(spec_path: &Path, name: &str) -> Result<Outcome> {
    let spec = load_spec(spec_path)?;
    let o = relation_order(spec.get(name)?);
    Ok(Outcome {
        json: json!({ "relation": name, "order": order_json(&o) }),
        text: format!("order({name}) = {o}\n"),
        passed: true,
    })
}

pub fn analyze(spec_path: &Path, generators: &[String]) -> Result<Outcome> {
    let spec = load_spec(spec_path)?;
    let c = closure_of(&spec, generators)?;
    let group = is_group(&c);
    let abelian = is_abelian(&c);
    let cyclic = iso_to_cyclic(&c);
    let orders: Vec<(String, OrderResult)> = generators
        .iter()
        .map(|g| Ok((g.clone(), relation_order(spec.get(g)?))))
        .collect::<Result<_>>()?;

    let missing: Vec<String> = group.missing_inverses.iter().map(|&i| c.element_name(i)).collect();
    let violation = abelian.violation.map(|(i, j)| [c.element_name(i), c.element_name(j)]);
    let cyclic_k = cyclic.as_ref().map(|iso| iso.k);
    let cyclic_gen = cyclic.as_ref().map(|iso| c.element_name(iso.generator));

    let mut text = String::new();
    writeln!(text, "closure size: {}", c.len())?;
    writeln!(text, "group: {}", group.is_group)?;
    if !missing.is_empty() {
        writeln!(text, "  without inverse: {}", missing.join(", "))?;
    }
    writeln!(text, "abelian: {}", abelian.is_abelian)?;
    if let Some([a, b]) = &violation {
        writeln!(text, "  {a} o {b} != {b} o {a}")?;
    }
    match (&cyclic_k, &cyclic_gen) {
        (Some(k), Some(g)) => writeln!(text, "cyclic: k = {k} (generator {g})")?,
        _ => writeln!(text, "cyclic: no")?,
    }
    for (g, o) in &orders {
        writeln!(text, "order({g}) = {o}")?;
    }
    Ok(Outcome {
        json: json!({
            "generators": generators,
            "closure_size": c.len(),
            "is_group": group.is_group,
            "missing_inverses": missing,
            "is_abelian": abelian.is_abelian,
            "abelian_violation": violation,
            "cyclic_k": cyclic_k,
            "cyclic_generator": cyclic_gen,
            "orders": orders.iter().map(|(g, o)| (g.clone(), order_json(o))).collect::<serde_json::Map<_, _>>(),
        }),
        text,
        passed: true,
    })
}

pub fn certify(spec_path: &Path) -> Result<Outcome> {
    let spec = load_spec(spec_path)?;
    let cert = theorem1_certificate(&spec.relations);
    let headline = match &cert.verdict {
        CertificateVerdict::Impossible { witness, order } => {
            format!("IMPOSSIBLE: witness {witness}, order {order}")
        }
        CertificateVerdict::NoObstructionFound => "NO-OBSTRUCTION-FOUND".to_owned(),
    };
    Ok(Outcome {
        json: serde_json::to_value(&cert)?,
        text: format!("{headline}\n{}\n", cert.argument),
        passed: true,
    })
}

pub fn fit(spec_path: &Path, dim: usize, tol: f64, out: &Path) -> Result<Outcome> {
    let spec = load_spec(spec_path)?;
    let result = fit_embedding(&spec.universe, &spec.relations, dim, tol)?;
    let file = File::create(out).with_context(|| format!("creating {}", out.display()))?;
    let mut writer = BufWriter::new(file);
    result.embedding.write_text(&mut writer)?;
    std::io::Write::flush(&mut writer)?;

    let mut text = String::new();
    writeln!(text, "objective: {}", num(result.objective))?;
    writeln!(text, "collapsed: {}", result.collapsed)?;
    writeln!(text, "solution dimension: {}", result.solution_dim)?;
    writeln!(text, "degenerate: {}", result.degenerate)?;
    writeln!(text, "truncated: {}", result.truncated)?;
    for (name, v) in &result.relation_vectors {
        let coords: Vec<String> = v.iter().copied().map(num).collect();
        writeln!(text, "v({name}) = [{}]", coords.join(", "))?;
    }
    writeln!(text, "wrote {}", out.display())?;
    Ok(Outcome {
        json: json!({
            "dim": dim,
            "objective": result.objective,
            "collapsed": result.collapsed,
            "solution_dim": result.solution_dim,
            "degenerate": result.degenerate,
            "truncated": result.truncated,
            "relation_vectors": result
                .relation_vectors
                .iter()
                .map(|(name, v)| (name.clone(), json!(v)))
                .collect::<serde_json::Map<_, _>>(),
            "out": out.display().to_string(),
        }),
        text,
        passed: true,
    })
}

pub fn audit(spec_path: &Path, emb_path: &Path, tol_rep: f64, tol_distinct: f64, mode: ModeArg) -> Result<Outcome> {
    let spec = load_spec(spec_path)?;
    let file = File::open(emb_path).with_context(|| format!("opening {}", emb_path.display()))?;
    let embedding = Embedding::read_text(BufReader::new(file))
        .with_context(|| format!("reading embedding {}", emb_path.display()))?
        .restrict_to(&spec.universe)?;
    let mode = match mode {
        ModeArg::Vector => Comparison::Vector,
        ModeArg::Ray => Comparison::Ray,
        ModeArg::Line => Comparison::Line,
    };
    let report = well_represented_with(&embedding, &spec.relations, tol_rep, tol_distinct, mode)?;

    let mut text = String::new();
    for r in &report.reports {
        writeln!(
            text,
            "{}: pairs {}, |mean| {}, max deviation {}, represented {}",
            r.name,
            r.pair_count,
            num(r.mean.iter().map(|x| x * x).sum::<f64>().sqrt()),
            num(r.max_deviation),
            r.is_representation
        )?;
    }
    for d in report.distances.iter().filter(|d| !d.distinct) {
        writeln!(text, "indistinct: {} ~ {} (distance {})", d.first, d.second, num(d.distance))?;
    }
    if report.vacuous {
        writeln!(text, "distinctness holds vacuously (fewer than two distinct relations)")?;
    }
    writeln!(text, "well-represented: {}", report.verdict)?;
    Ok(Outcome { json: serde_json::to_value(&report)?, text, passed: report.verdict })
}

pub fn repr(spec_path: &Path, generators: &[String], kind: ReprKind) -> Result<Outcome> {
    let spec = load_spec(spec_path)?;
    let c = closure_of(&spec, generators)?;
    let first_gen = c.generator_indices[0];
    let (dump, check, gen_order, label) = match kind {
        ReprKind::Roots => {
            let rep = roots_of_unity_repr::<f64>(&c).context("roots-of-unity representation needs a cyclic group")?;
            let check = verify_multiplicative(&rep, relalg::alt_repr::SCALAR_TOLERANCE);
            let order = rep.image_order(first_gen, relalg::alt_repr::SCALAR_TOLERANCE);
            (rep.to_json(), check, order, format!("roots of unity, k = {}", rep.k))
        }
        ReprKind::Cayley => {
            let rep = cayley_repr(&c).context("Cayley representation needs a group")?;
            let check = verify_multiplicative(&rep, 0.0);
            let order = rep.image_order(first_gen, 0.0);
            (rep.to_json(), check, order, format!("Cayley permutations of size {}", c.len()))
        }
    };
    let mut text = format!("{label}\n");
    for i in 0..c.len() {
        let name = c.element_name(i);
        writeln!(text, "{name} -> {}", dump[&name])?;
    }
    writeln!(text, "multiplicative and distinct: {}", check.holds)?;
    match gen_order {
        Some(k) => writeln!(text, "order of image of {} = {k}", generators[0])?,
        None => writeln!(text, "order of image of {} not reached", generators[0])?,
    }
    Ok(Outcome {
        json: json!({
            "kind": match kind { ReprKind::Roots => "roots", ReprKind::Cayley => "cayley" },
            "closure_size": c.len(),
            "images": dump,
            "verification": check,
            "generator_image_order": gen_order,
        }),
        text,
        passed: check.holds,
    })
}

pub fn psi(counts_path: &Path, alpha: f64, out: &Path) -> Result<Outcome> {
    let file = File::open(counts_path).with_context(|| format!("opening {}", counts_path.display()))?;
    let table = CountTable::read_tsv(BufReader::new(file))?;
    let model = build_conditional(&table, alpha)?;
    let embedding = psi_embedding(&model);
    let mut writer = BufWriter::new(File::create(out).with_context(|| format!("creating {}", out.display()))?);
    embedding.write_text(&mut writer)?;
    std::io::Write::flush(&mut writer)?;
    Ok(Outcome {
        json: json!({
            "words": table.words.len(),
            "contexts": table.contexts,
            "alpha": alpha,
            "out": out.display().to_string(),
        }),
        text: format!(
            "psi embedding: {} words x {} contexts (alpha = {alpha}), wrote {}\n",
            table.words.len(),
            table.contexts.len(),
            out.display()
        ),
        passed: true,
    })
}

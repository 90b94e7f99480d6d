use std::time::Instant;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use cornerkit::coxeter::{
    asphericity_witness_with_budget, coxeter_nerve, is_proper_labeling, is_proper_labeling_exhaustive, presentation,
};
use cornerkit::dualcells::{acyclicity_report, is_cocycle, solve_obstruction, DualComplex};
use cornerkit::equivalence::{find_isomorphism, invariant_fingerprint};
use cornerkit::ghs::{is_ghs_with, is_polyhedral_homology_manifold_with, CheckOptions, GhsReport};
use cornerkit::homology::{homology, reduced_homology_all, FGAbelianGroup};
use cornerkit::io::{
    cochain_value, complex_value, group_value, labeled_value, matrix_value, pair_value, parse_cochain, parse_complex, parse_fan,
    parse_pair, to_pretty_json, ComplexDocument, PairDocument,
};
use cornerkit::quasitoric::{
    even_betti_report, from_fan, h1_total_space, is_characteristic, pi1_orbit_union, unimodular_completion,
};
use cornerkit::simplicial::{barycentric, barycentric_all_two, cone, join, suspension, LabeledComplex, SimplicialComplex};
use cornerkit::{ghs, Error};

use crate::input::{load, load_all, Loaded};
use crate::report::{Failure, Outcome, Report};
use crate::{Command, ConstructKind, Global};

pub fn run(command: &Command, g: &Global) -> Result<Outcome, Failure> {
    let start = Instant::now();
    let mut report = match command {
        Command::Construct { kind, size, input } => return construct(*kind, *size, input, g),
        Command::CheckGhs { input, dim, stop_at_first } => {
            let src = load(input.input.as_deref())?;
            let doc = parse_complex(&src.text)?;
            let r = is_ghs_with(&doc.complex, *dim, CheckOptions { stop_at_first: *stop_at_first })?;
            ghs_report("check-ghs", &src, r)
        }
        Command::CheckPhm { input, dim, stop_at_first } => {
            let src = load(input.input.as_deref())?;
            let doc = parse_complex(&src.text)?;
            let r = is_polyhedral_homology_manifold_with(&doc.complex, *dim, CheckOptions { stop_at_first: *stop_at_first })?;
            ghs_report("check-phm", &src, r)
        }
        Command::CheckProper { input, uniform_label, exhaustive } => {
            let src = load(input.input.as_deref())?;
            let lk = labeled(&parse_complex(&src.text)?, *uniform_label)?;
            let v = if *exhaustive { is_proper_labeling_exhaustive(&lk) } else { is_proper_labeling(&lk) };
            let mut r = Report::new("check-proper", &[&src]);
            r.verdict = v.proper;
            r.set("proper", v.proper);
            r.set("offending", serde_json::to_value(&v.offending).expect("serializable"));
            if let Some(fv) = &v.offending_verdict {
                r.set("offending_subgroup", serde_json::to_value(fv).expect("serializable"));
            }
            r.set("presentation", presentation(&lk));
            r
        }
        Command::CheckAspherical { input, uniform_label } => {
            let src = load(input.input.as_deref())?;
            let lk = labeled(&parse_complex(&src.text)?, *uniform_label)?;
            let witness = asphericity_witness_with_budget(&lk, g.budget)?;
            let mut r = Report::new("check-aspherical", &[&src]);
            r.verdict = witness.is_none();
            r.set("aspherical", witness.is_none());
            r.set("witness", serde_json::to_value(&witness).expect("serializable"));
            r
        }
        Command::CoxeterNerve { input, uniform_label, max_rank } => {
            let src = load(input.input.as_deref())?;
            let lk = labeled(&parse_complex(&src.text)?, *uniform_label)?;
            let k = lk.complex();
            let cap = max_rank.unwrap_or(((k.dim() + 2).max(1) as usize).min(k.num_vertices().max(1)));
            let nerve = coxeter_nerve(&lk, cap, g.budget)?;
            let mut r = Report::new("coxeter-nerve", &[&src]);
            r.verdict = true;
            r.set("equals_input", nerve == *k);
            r.set("max_rank", cap);
            r.set("nerve", complex_value(&nerve));
            r
        }
        Command::Equiv { input, other } => {
            let srcs = load_all(&[input.as_deref(), Some(other.as_str())])?;
            let (a, b) = (parse_complex(&srcs[0].text)?, parse_complex(&srcs[1].text)?);
            let labeled_run = a.labels.is_some() || b.labels.is_some();
            let (la, lb) = (a.labeled_or(2)?, b.labeled_or(2)?);
            let mapping = find_isomorphism(&la, &lb);
            let mut r = Report::new("equiv", &[&srcs[0], &srcs[1]]);
            r.verdict = mapping.is_some();
            r.set("labeled", labeled_run);
            r.set("mapping", serde_json::to_value(&mapping).expect("serializable"));
            r.set("fingerprints_equal", invariant_fingerprint(&la) == invariant_fingerprint(&lb));
            r
        }
        Command::Homology { input, reduced } => {
            let src = load(input.input.as_deref())?;
            let k = parse_complex(&src.text)?.complex;
            let (first, groups): (isize, Vec<FGAbelianGroup>) = if *reduced {
                (-1, reduced_homology_all(&k))
            } else {
                (0, (0..=k.dim().max(0)).map(|d| homology(&k, d)).collect())
            };
            let mut r = Report::new("homology", &[&src]);
            r.verdict = true;
            r.set("reduced", *reduced);
            r.set("groups", groups_value(first, &groups));
            r.set("f_vector", json!(k.f_vector()));
            r
        }
        Command::SolveObstruction { input, dim, cochain, no_top } => {
            let srcs = load_all(&[input.input.as_deref(), Some(cochain.as_str())])?;
            let nerve = parse_complex(&srcs[0].text)?.complex;
            let d = DualComplex::new(&nerve, *dim, !*no_top)?;
            let c = parse_cochain(&srcs[1].text, &d)?;
            let mut r = Report::new("solve-obstruction", &[&srcs[0], &srcs[1]]);
            let check = is_cocycle(&d, &c);
            r.set("cocycle", check.cocycle);
            r.set("witness", serde_json::to_value(&check.witness).expect("serializable"));
            if check.cocycle {
                match solve_obstruction(&d, &c)? {
                    Some(sol) => {
                        r.verdict = true;
                        r.set("solution", cochain_value(&sol, &d));
                    }
                    None => {
                        r.set("solution", Value::Null);
                        r.set("reason", "no solution: the dual complex is not acyclic in this degree");
                    }
                }
            }
            r
        }
        Command::Acyclicity { input, dim, no_top } => {
            let src = load(input.input.as_deref())?;
            let nerve = parse_complex(&src.text)?.complex;
            let d = DualComplex::new(&nerve, *dim, !*no_top)?;
            let a = acyclicity_report(&d);
            let mut r = Report::new("acyclicity", &[&src]);
            r.verdict = a.resolution_ready;
            r.set("resolution_ready", a.resolution_ready);
            r.set("homology", groups_value(0, &a.homology));
            r.set("face_counts", json!((0..=*dim).map(|k| d.num_faces(k)).collect::<Vec<_>>()));
            r
        }
        Command::CheckCharfun { input, normalize } => {
            let src = load(input.input.as_deref())?;
            let (doc, warnings) = pair(&src, *normalize)?;
            let p = &doc.pair;
            let check = is_characteristic(p);
            let mut r = Report::new("check-charfun", &[&src]);
            r.warnings = warnings;
            r.verdict = check.characteristic;
            r.set("characteristic", check.characteristic);
            r.set("offending", serde_json::to_value(&check.offending).expect("serializable"));
            let pi1 = pi1_orbit_union(p);
            r.set("pi1_orbit_union", group_value(&pi1));
            r.set("pi1_orbit_union_text", pi1.to_string());
            if let Some(lifts) = &doc.lifts {
                r.set("h1_total_space", group_value(&h1_total_space(p, lifts)?));
            }
            let completion = unimodular_completion(p);
            r.set("unimodular_completion", completion.as_ref().map_or(Value::Null, matrix_value));
            r
        }
        Command::FromFan { input } => {
            let src = load(input.input.as_deref())?;
            let fan = parse_fan(&src.text)?;
            let p = from_fan(&fan)?;
            let complete = ghs::is_ghs(p.nerve(), p.n() as isize)?.verdict;
            let check = is_characteristic(&p);
            let mut r = Report::new("from-fan", &[&src]);
            r.verdict = complete && check.characteristic;
            r.set("pair", pair_value(&p));
            r.set("characteristic", check.characteristic);
            r.set("nerve_is_homology_sphere", complete);
            r.set(
                "completeness_certificate",
                "combinatorial: the nerve is a homology (n-1)-sphere; cone covering is not checked geometrically",
            );
            r
        }
        Command::Betti { input, normalize } => {
            let src = load(input.input.as_deref())?;
            let (doc, warnings) = pair(&src, *normalize)?;
            let mut r = Report::new("betti", &[&src]);
            r.warnings = warnings;
            match even_betti_report(&doc.pair) {
                Ok(b) => {
                    r.verdict = true;
                    for (k, v) in serde_json::to_value(&b).expect("serializable").as_object().expect("object") {
                        r.set(k, v.clone());
                    }
                }
                Err(Error::Precondition(msg)) => r.set("precondition_failed", msg),
                Err(e) => return Err(e.into()),
            }
            r
        }
    };
    if g.timing {
        report.timing = Some(start.elapsed());
    }
    Ok(report.finish(g.format))
}

fn ghs_report(command: &'static str, src: &Loaded, r: GhsReport) -> Report {
    let mut out = Report::new(command, &[src]);
    out.verdict = r.verdict;
    for (k, v) in serde_json::to_value(&r).expect("serializable").as_object().expect("object") {
        out.set(k, v.clone());
    }
    out
}

fn labeled(doc: &ComplexDocument, uniform: Option<u64>) -> Result<LabeledComplex, Failure> {
    match (uniform, &doc.labels) {
        (Some(m), None) => Ok(doc.labeled_or(m)?),
        (Some(_), Some(_)) => Err(Failure("--uniform-label given but the input already has labels".into())),
        (None, _) => Ok(doc.labeled()?),
    }
}

fn pair(src: &Loaded, normalize: bool) -> Result<(PairDocument, Vec<String>), Failure> {
    let mut doc = parse_pair(&src.text)?;
    if !normalize {
        return Ok((doc, Vec::new()));
    }
    let (p, warnings) = doc.pair.normalized();
    for w in &warnings {
        log::warn!("{w}");
    }
    doc.pair = p;
    Ok((doc, warnings))
}

fn groups_value(first: isize, groups: &[FGAbelianGroup]) -> Value {
    Value::Array(
        groups
            .iter()
            .enumerate()
            .map(|(i, h)| json!({ "degree": first + i as isize, "group": group_value(h), "text": h.to_string() }))
            .collect(),
    )
}

fn construct(kind: ConstructKind, size: Option<usize>, inputs: &[String], g: &Global) -> Result<Outcome, Failure> {
    let need_size = |what: &str| size.ok_or_else(|| Failure(format!("{what} needs a size argument")));
    let arity = |n: usize| -> Result<(), Failure> {
        let given = inputs.len().max(1);
        if given != n || size.is_some() {
            return Err(Failure(format!("{kind:?} takes {n} input(s) and no size")));
        }
        Ok(())
    };
    let one = || -> Result<ComplexDocument, Failure> { Ok(parse_complex(&load(inputs.first().map(String::as_str))?.text)?) };
    let value = match kind {
        ConstructKind::BoundarySimplex | ConstructKind::Simplex | ConstructKind::Cycle => {
            if !inputs.is_empty() {
                return Err(Failure(format!("{kind:?} takes no input")));
            }
            let n = need_size("generator")?;
            let k = match kind {
                ConstructKind::BoundarySimplex => SimplicialComplex::boundary_simplex(n),
                ConstructKind::Simplex => SimplicialComplex::simplex(n),
                _ if n < 3 => return Err(Failure("a cycle needs at least 3 vertices".into())),
                _ => SimplicialComplex::cycle(n),
            };
            complex_value(&k)
        }
        ConstructKind::Cone => {
            arity(1)?;
            complex_value(&cone(&one()?.complex))
        }
        ConstructKind::Suspension => {
            arity(1)?;
            complex_value(&suspension(&one()?.complex))
        }
        ConstructKind::Barycentric => {
            arity(1)?;
            complex_value(&barycentric(&one()?.complex))
        }
        ConstructKind::BarycentricAllTwo => {
            arity(1)?;
            labeled_value(&barycentric_all_two(&one()?.complex))
        }
        ConstructKind::Join => {
            if inputs.len() != 2 || size.is_some() {
                return Err(Failure("join takes exactly two inputs (-i A -i B, `-` for stdin)".into()));
            }
            let srcs = load_all(&[Some(inputs[0].as_str()), Some(inputs[1].as_str())])?;
            let (a, b) = (parse_complex(&srcs[0].text)?, parse_complex(&srcs[1].text)?);
            complex_value(&join(&a.complex, &b.complex))
        }
        ConstructKind::Shuffle => {
            arity(1)?;
            let doc = one()?;
            let mut perm: Vec<usize> = (0..doc.complex.num_vertices()).collect();
            perm.shuffle(&mut ChaCha8Rng::seed_from_u64(g.seed));
            match &doc.labels {
                Some(_) => labeled_value(&doc.labeled()?.relabel(&perm)?),
                None => complex_value(&doc.complex.relabel(&perm)?),
            }
        }
    };
    Ok(Outcome { text: to_pretty_json(&value) + "\n", code: 0 })
}

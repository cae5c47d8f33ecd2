//! Acceptance suite: one line per criterion, nonzero exit on any failure.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::Command as Process;
use std::time::Instant;

use algebroidkit::algebroid::{Algebroid, RandomJacobi, RandomSections, Section, Suite};
use algebroidkit::constructions::{
    anchor_morphism, inclusion_morphism, poisson_cotangent, projection_morphism, semidirect_product, PoissonBivector,
    SplitExtension,
};
use algebroidkit::derivation::Derivation;
use algebroidkit::files::{to_json, to_pretty_string, Document, Kind};
use algebroidkit::morphism::AlgebroidMorphism;

use common::schouten::Bivector;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn full_suite(a: &Algebroid, seed: u64) -> algebroidkit::report::CheckReport {
    a.check_axioms("acceptance", Suite::All, RandomJacobi { trials: 25, max_degree: 2, seed })
}

fn axiom_suite() -> Outcome {
    let valid = common::valid_algebroids();
    for (name, a) in &valid {
        for seed in 1..=5 {
            let r = full_suite(a, seed);
            ensure(r.passed(), || format!("{name} seed {seed}:\n{r}"))?;
        }
    }
    let broken = common::broken_algebroids();
    for (name, a) in &broken {
        let r = full_suite(a, 1);
        ensure(!r.passed(), || format!("broken twin {name} passed"))?;
        for item in r.items.iter().filter(|i| !i.passed()) {
            let w = item.witness.as_ref().ok_or_else(|| format!("{name}: {} has no witness", item.check))?;
            ensure(w.residual.iter().any(|s| s != "0"), || format!("{name}: {} witness is zero", item.check))?;
        }
    }
    Ok(format!("{} valid algebroids x seeds 1-5 pass; {} broken twins fail with witnesses", valid.len(), broken.len()))
}

fn poisson_iff_jacobi() -> Outcome {
    let mut agree = 0;
    let mut poisson = 0;
    for (name, coords, entries) in common::BIVECTORS {
        let c = common::chart(coords);
        let oracle = Bivector::new(&c, entries).is_poisson();
        let components = entries.iter().map(|&(a, b, s)| ((a - 1, b - 1), common::poly(&c, s))).collect();
        let (alg, report) = poisson_cotangent(&PoissonBivector::new(&c, components).unwrap());
        let random = alg.check_jacobi_random(RandomJacobi::default());
        let checks = report.passed() && random.passed();
        ensure(checks == oracle, || format!("{name}: Schouten says {oracle}, checks say {checks}\n{report}"))?;
        agree += 1;
        poisson += oracle as usize;
        if name == "symplectic_plus_x1" {
            ensure(!checks, || "∂1∧∂2 + x1∂3∧∂4 passed".into())?;
        }
        if name == "lie_poisson_so3" {
            ensure(checks, || "so(3)* failed".into())?;
        }
    }
    Ok(format!("{agree}/10 agree with the Schouten oracle ({poisson} Poisson)"))
}

fn semidirect_jacobi() -> Outcome {
    let valid = common::valid_actions();
    ensure(valid.len() >= 6, || format!("only {} valid actions", valid.len()))?;
    for required in ["foliation_on_foliation.json", "tangent_on_so3.json"] {
        ensure(valid.iter().any(|(n, _)| n == required), || format!("missing {required}"))?;
    }
    for (name, act) in &valid {
        ensure(act.check(name).passed(), || format!("{name} action check fails"))?;
        let p = semidirect_product(act, false).map_err(|e| format!("{name}: {e}"))?;
        for seed in 1..=5 {
            let r = full_suite(&p, seed);
            ensure(r.passed(), || format!("{name} product seed {seed}:\n{r}"))?;
        }
    }
    let perturbed = [
        ("broken_derivation_action.json", "derivation_i"),
        ("broken_family.json", "action_family"),
        ("broken_project.json", "action_project"),
        ("broken_hom.json", "action_hom"),
    ];
    for (name, broken) in perturbed {
        let act = common::action(name);
        let r = act.check(name);
        let failed: Vec<&str> = r.items.iter().filter(|i| !i.passed()).map(|i| i.check.as_str()).collect();
        ensure(failed == [broken], || format!("{name} should fail only {broken}, fails {failed:?}"))?;
        let p = semidirect_product(&act, true).map_err(|e| e.to_string())?;
        ensure(!full_suite(&p, 1).passed(), || format!("forced product of {name} passes"))?;
    }
    Ok(format!("{} valid products pass seeds 1-5; 4 single-condition perturbations fail", valid.len()))
}

fn recovery_identity() -> Outcome {
    let mut count = 0;
    let all = common::valid_actions().into_iter().chain(common::broken_actions());
    for (name, act) in all {
        let p = semidirect_product(&act, true).map_err(|e| e.to_string())?;
        let (r, s) = (act.acting().rank(), act.acted().rank());
        let zero = Section::zeros(p.base(), r);
        for i in 0..r {
            for k in 0..s {
                let lhs = p.bracket(&Section::basis(&p, i), &Section::basis(&p, r + k)).map_err(|e| e.to_string())?;
                let nabla = act.act(i, &Section::basis(act.acted(), k));
                let rhs = Section::new([zero.coeffs(), nabla.coeffs()].concat());
                ensure(lhs == rhs, || {
                    format!("{name}: [q*e{}, f{}] = {:?} vs {:?}", i + 1, k + 1, lhs.render(), rhs.render())
                })?;
                count += 1;
            }
        }
    }
    Ok(format!("{count} mixed frame brackets equal 0 ⊕ ∇ᵢ(fₖ)"))
}

fn serialize(a: &Algebroid) -> String {
    to_pretty_string(&to_json(&Document::Algebroid(a.clone())))
}

fn curvature_round_trip() -> Outcome {
    let mut exts: Vec<(String, SplitExtension, Option<Algebroid>)> = Vec::new();
    for (name, act) in common::valid_actions() {
        let original = semidirect_product(&act, false).map_err(|e| e.to_string())?;
        exts.push((name, SplitExtension::from_action(&act).map_err(|e| e.to_string())?, Some(original)));
    }
    for name in ["ext_semidirect_atiyah.json", "ext_semidirect_affine.json", "ext_semidirect_rotations.json"] {
        exts.push((name.to_string(), common::extension(name), None));
    }
    for (name, ext, original) in &exts {
        let curv = ext.curvature_form();
        ensure(curv.is_zero() && curv.consistent, || format!("{name}: curvature {:?}", curv.nonzero_pairs()))?;
        let rec = ext.reconstruct().map_err(|e| format!("{name}: {e}"))?;
        ensure(rec.succeeded(), || format!("{name}: reconstruction failed\n{}", rec.action_report))?;
        let original = original.as_ref().unwrap_or(ext.total());
        ensure(serialize(&rec.product) == serialize(original), || format!("{name}: serialized product differs"))?;
    }
    let heis = common::extension("ext_heisenberg.json");
    let curv = heis.curvature_form();
    ensure(curv.nonzero_pairs() == [(1, 2)], || "Heisenberg κ(e1,e2) should be nonzero".into())?;
    ensure(curv.kappa[0].1.render() == ["1"], || format!("κ = {:?}", curv.kappa[0].1.render()))?;
    let flat = heis.check_flat("heisenberg");
    ensure(flat.item("flatness").unwrap().passed(), || "Heisenberg flatness should PASS".into())?;
    ensure(!flat.item("kappa_zero").unwrap().passed(), || "Heisenberg kappa_zero should FAIL".into())?;
    ensure(heis.reconstruct().is_err(), || "reconstruct should refuse κ ≠ 0".into())?;
    Ok(format!(
        "{} extensions: κ = 0 and byte-identical reconstruction; Heisenberg κ = f1, flat, not split",
        exts.len()
    ))
}

fn derivation_algebra() -> Outcome {
    let mut total = 0;
    for (idx, (name, a)) in common::valid_algebroids().into_iter().enumerate() {
        let mut rng = RandomSections::new(1000 + idx as u64);
        let sections: Vec<Section> = (0..20).map(|_| rng.section(&a, 2)).collect();
        let inner: Vec<Derivation> = sections.iter().map(|s| Derivation::inner(&a, s).unwrap()).collect();
        for (k, d) in inner.iter().enumerate() {
            let r = d.check(&a, name.as_str()).unwrap();
            ensure(r.passed(), || format!("{name}: inner derivation {k} fails\n{r}"))?;
        }
        for k in 0..10 {
            let (s, t) = (&sections[2 * k], &sections[2 * k + 1]);
            let lhs = inner[2 * k].bracket(&inner[2 * k + 1], &a).unwrap();
            let rhs = Derivation::inner(&a, &a.bracket(s, t).unwrap()).unwrap();
            ensure(lhs == rhs, || format!("{name}: [ad s, ad t] != ad [s,t] for pair {k}"))?;
        }
        for k in 0..10 {
            let (d1, d2, d3) = (&inner[k], &inner[k + 5], &inner[k + 10]);
            let cyc =
                |x: &Derivation, y: &Derivation, z: &Derivation| x.bracket(&y.bracket(z, &a).unwrap(), &a).unwrap();
            let sum = cyc(d1, d2, d3).add(&cyc(d2, d3, d1)).unwrap().add(&cyc(d3, d1, d2)).unwrap();
            ensure(sum.is_zero(), || format!("{name}: Jacobi of der_bracket fails on triple {k}"))?;
        }
        total += 20;
    }
    Ok(format!("{total} inner derivations verified; ad is a homomorphism; Der Jacobi holds"))
}

fn morphism_suite() -> Outcome {
    let valid = common::valid_algebroids();
    for (name, a) in &valid {
        let r = anchor_morphism(a).check(name).unwrap();
        ensure(r.passed(), || format!("anchor map of {name}:\n{r}"))?;
    }
    let actions = common::valid_actions();
    for (name, act) in &actions {
        let p = semidirect_product(act, false).unwrap();
        let j = inclusion_morphism(act, &p).unwrap().check(name).unwrap();
        ensure(j.passed(), || format!("inclusion for {name}:\n{j}"))?;
        let pi = projection_morphism(act, &p).unwrap().check(name).unwrap();
        ensure(pi.passed(), || format!("projection for {name}:\n{pi}"))?;
    }
    let Document::Morphism(m) = common::load("so3_sign_corrupted.json", Kind::Morphism) else { unreachable!() };
    let m: AlgebroidMorphism = m;
    let r = m.check("so3_sign_corrupted").unwrap();
    let item = r.item("morphism_bracket").unwrap();
    ensure(!item.passed() && item.witness.is_some(), || format!("sign-corrupted morphism:\n{r}"))?;
    Ok(format!(
        "{} anchor maps, {} inclusion/projection pairs verify; sign-corrupted so(3) fails morphism_bracket",
        valid.len(),
        actions.len()
    ))
}

fn injective_anchor_closure() -> Outcome {
    let mut names = Vec::new();
    for (name, act) in common::valid_actions() {
        let (g, h) = (act.acting(), act.acted());
        if g.rank() == 0 || h.rank() == 0 || g.anchor_generic_rank() != g.rank() || h.anchor_generic_rank() != h.rank()
        {
            continue;
        }
        let p = semidirect_product(&act, false).unwrap();
        ensure(p.anchor_generic_rank() == g.rank() + h.rank(), || {
            format!("{name}: product anchor rank {}", p.anchor_generic_rank())
        })?;
        names.push(name);
    }
    ensure(names.len() >= 3, || format!("only {} foliation-type fixtures", names.len()))?;
    Ok(format!("{} foliation-type products have injective anchor: {}", names.len(), names.join(", ")))
}

fn determinism() -> Outcome {
    let run = || {
        let out = Process::new(env!("CARGO_BIN_EXE_algebroidkit"))
            .args(["corpus", "run", "--json"])
            .env_remove("ALGEBROIDKIT_SEED")
            .output()
            .map_err(|e| e.to_string())?;
        ensure(out.status.code() == Some(0), || format!("corpus run exited {:?}", out.status.code()))?;
        Ok::<_, String>(out.stdout)
    };
    let (first, second) = (run()?, run()?);
    ensure(first == second, || "two consecutive runs differ".into())?;
    let golden = std::fs::read(concat!(env!("CARGO_MANIFEST_DIR"), "/tests/golden/corpus_run.json"))
        .map_err(|e| e.to_string())?;
    ensure(first == golden, || "output differs from tests/golden/corpus_run.json".into())?;
    Ok(format!("{} bytes, identical across runs and to the golden file", first.len()))
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("axiom suite", axiom_suite),
        ("Poisson iff Jacobi", poisson_iff_jacobi),
        ("semi-direct Jacobi", semidirect_jacobi),
        ("recovery identity", recovery_identity),
        ("curvature round trip", curvature_round_trip),
        ("derivation algebra", derivation_algebra),
        ("morphism suite", morphism_suite),
        ("injective-anchor closure", injective_anchor_closure),
        ("determinism", determinism),
    ];
    let mut failures = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {} {name}: PASS ({secs:.1}s) {detail}", i + 1),
            Err(why) => {
                failures += 1;
                println!("criterion {} {name}: FAIL ({secs:.1}s) {why}", i + 1);
            }
        }
    }
    println!("acceptance: {}/{} criteria pass", criteria.len() - failures, criteria.len());
    if failures > 0 {
        std::process::exit(1);
    }
}

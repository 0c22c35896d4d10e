//! Acceptance gate: one line per criterion, nonzero exit if any fails.

#[path = "../../core/tests/common/mod.rs"]
mod common;
mod support;

use std::time::{Duration, Instant};

use common::{hom_count_egf, plethysm_oracle, sigma_family, syt_count, traceless_oracle, BasisCache};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sigma_brauer::brauer::{compose, hom_basis, tensor, Morphism};
use sigma_brauer::combinat::{schur_dim, Partition, PartitionTuple};
use sigma_brauer::exactla::{rat, Rational};
use sigma_brauer::modcat::{ext_dim, multiplicity, simple_realization_dim, socle_check, theta_apply, FormPoint};
use sigma_brauer::schurweyl::weight_space_basis;
use sigma_brauer::specht::{sn_character, SnRep, SpechtBasis};
use sigma_brauer::stabilizer::{
    gamma_linearity_check, germinal_axiom_suite, monomial_symmetries, sample_g, GLElement, LinearityMode, MapPresentation,
};
use sigma_brauer::symfun::{plethysm_e, plethysm_h, shift_decompose, SchurExpr};
use sigma_brauer::Error;

type Check = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn ok<T, E: std::fmt::Display>(r: Result<T, E>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn step1_oracle() -> Check {
    let mut cases = 0;
    for sigma in sigma_family() {
        for n in 0..=6 {
            for m in 0..=n {
                let d = ok(hom_basis(&sigma, n, m))?.len();
                let w = ok(weight_space_basis(&sigma, n, m))?.len();
                ensure(d == w, || format!("σ={sigma} n={n} m={m}: {d} diagrams, {w} weight vectors"))?;
                ensure(d as u128 == hom_count_egf(&sigma, n, m), || format!("σ={sigma} n={n} m={m}: count off"))?;
                cases += 1;
            }
        }
    }
    Ok(format!("{cases} (σ, n, m) cases equal"))
}

fn brauer_counts() -> Check {
    let sigma: PartitionTuple = "2".parse().unwrap();
    let got: Vec<usize> = (1..=4).map(|k| hom_basis(&sigma, 2 * k, 0).map(|b| b.len())).collect::<Result<_, _>>().map_err(|e| e.to_string())?;
    ensure(got == [1, 3, 15, 105], || format!("got {got:?}"))?;
    Ok("1, 3, 15, 105".into())
}

fn category_laws() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut cache = BasisCache::default();
    let (mut assoc, mut ident, mut inter) = (0, 0, 0);
    for sigma in sigma_family() {
        let draw = |cache: &mut BasisCache, rng: &mut ChaCha8Rng| loop {
            let a = rng.gen_range(0..=5usize);
            let b = rng.gen_range(0..=a);
            let c = rng.gen_range(0..=b);
            let d = rng.gen_range(0..=c);
            if let (Some(f), Some(g), Some(h)) =
                (cache.random_morphism(&sigma, a, b, rng), cache.random_morphism(&sigma, b, c, rng), cache.random_morphism(&sigma, c, d, rng))
            {
                return (f, g, h);
            }
        };
        for _ in 0..200 {
            let (f, g, h) = draw(&mut cache, &mut rng);
            let l = ok(compose(&h, &ok(compose(&g, &f))?))?;
            let r = ok(compose(&ok(compose(&h, &g))?, &f))?;
            ensure(l == r, || format!("associativity fails for σ={sigma}: {f:?} {g:?} {h:?}"))?;
            assoc += 1;
        }
        for _ in 0..50 {
            let (f, _, _) = draw(&mut cache, &mut rng);
            let is = ok(Morphism::identity(&sigma, f.source()))?;
            let it = ok(Morphism::identity(&sigma, f.target()))?;
            ensure(ok(compose(&f, &is))? == f && ok(compose(&it, &f))? == f, || format!("identity law fails: {f:?}"))?;
            ident += 1;
        }
        for _ in 0..100 {
            let (f, f2, _) = draw(&mut cache, &mut rng);
            let (g, g2, _) = draw(&mut cache, &mut rng);
            let l = ok(compose(&ok(tensor(&f2, &g2))?, &ok(tensor(&f, &g))?))?;
            let r = ok(tensor(&ok(compose(&f2, &f))?, &ok(compose(&g2, &g))?))?;
            ensure(l == r, || format!("interchange fails for σ={sigma}"))?;
            inter += 1;
        }
    }
    Ok(format!("{assoc} associativity, {ident} identity, {inter} interchange checks"))
}

fn theta_functoriality() -> Check {
    let family = sigma_family();
    let mut checked = 0;
    for seed in [11u64, 12, 13] {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut cache = BasisCache::default();
        let mut pairs = 0;
        while pairs < 100 {
            let sigma = &family[rng.gen_range(0..family.len())];
            let rank = rng.gen_range(1..=3);
            let omega = ok(FormPoint::random(sigma, rank, rng.gen()))?;
            let a = rng.gen_range(0..=4usize);
            let b = rng.gen_range(0..=a);
            let c = rng.gen_range(0..=b);
            let (Some(f), Some(g)) = (cache.random_morphism(sigma, a, b, &mut rng), cache.random_morphism(sigma, b, c, &mut rng)) else {
                continue;
            };
            let th = |m: &Morphism| theta_apply(&omega, m).map_err(|e| e.to_string());
            ensure(th(&ok(compose(&g, &f))?)? == ok(th(&g)?.mul(&th(&f)?))?, || format!("θ(g∘f) fails, σ={sigma}, seed {seed}"))?;
            let x = rng.gen_range(0..=2usize);
            let y = rng.gen_range(0..=x);
            if let Some(h) = cache.random_morphism(sigma, x, y, &mut rng) {
                ensure(th(&ok(tensor(&f, &h))?)? == th(&f)?.kron(&th(&h)?), || format!("θ(f⊗g) fails, σ={sigma}, seed {seed}"))?;
            }
            pairs += 1;
            checked += 1;
        }
    }
    Ok(format!("{checked} pairs over 3 seeds"))
}

fn shift_invariant() -> Check {
    let mut cases = 0;
    for lam in Partition::all_up_to(5) {
        for n in 0..=3 {
            let sh = shift_decompose(&lam, n);
            ensure(sh.get(&lam) == Some(&1), || format!("{lam} not exactly once in sh_{n}"))?;
            ensure(sh.keys().all(|nu| nu == &lam || nu.size() < lam.size()), || format!("sh_{n}({lam}) has a large part"))?;
            for big in 0..=4 {
                let total: u64 = sh.iter().map(|(nu, m)| m * schur_dim(nu, big)).sum();
                ensure(total == schur_dim(&lam, n + big), || format!("dimension mismatch for {lam}, n={n}, N={big}"))?;
            }
            cases += 1;
        }
    }
    Ok(format!("{cases} (λ, n) cases"))
}

fn multiplicity_theorem() -> Check {
    let mut cases = 0;
    for sigma in sigma_family() {
        for lam in Partition::all_up_to(6) {
            for mu in Partition::all_up_to(6) {
                let m = ok(multiplicity(&sigma, &lam, &mu))?;
                if mu == lam {
                    ensure(m == 1, || format!("[K^{lam} : L_{lam}] = {m} for σ={sigma}"))?;
                } else if mu.size() >= lam.size() {
                    ensure(m == 0, || format!("[K^{lam} : L_{mu}] = {m} for σ={sigma}"))?;
                }
                cases += 1;
            }
        }
    }
    Ok(format!("{cases} triples"))
}

fn ext_corollary() -> Check {
    for sigma in sigma_family() {
        for lam in Partition::all_up_to(4) {
            for mu in Partition::all_up_to(4) {
                let e = ok(ext_dim(&sigma, 0, &lam, &mu))?;
                ensure(e == u64::from(lam == mu), || format!("Ext^0({lam}, {mu}) = {e} for σ={sigma}"))?;
            }
        }
    }
    let s2: PartitionTuple = "2".parse().unwrap();
    let empty = Partition::empty();
    for mu in Partition::all_up_to(8) {
        let e1 = ok(ext_dim(&s2, 1, &empty, &mu))?;
        let e2 = ok(ext_dim(&s2, 2, &empty, &mu))?;
        ensure(e1 == u64::from(mu == Partition::row(2)), || format!("Ext^1(L_∅, L_{mu}) = {e1}"))?;
        ensure(e2 == u64::from(mu == Partition::of(&[3, 1])), || format!("Ext^2(L_∅, L_{mu}) = {e2}"))?;
    }
    let mut pleth = 0;
    for a in 1..=3 {
        for nu in Partition::all_up_to(3).into_iter().filter(|p| !p.is_empty()) {
            let inner = SchurExpr::schur(nu.clone());
            for (exterior, got) in [(false, plethysm_h(a, &inner)), (true, plethysm_e(a, &inner))] {
                let got: std::collections::BTreeMap<Partition, i64> =
                    ok(got)?.terms().iter().map(|(p, c)| (p.clone(), c.to_integer().try_into().unwrap())).collect();
                ensure(got == plethysm_oracle(exterior, a, &nu), || format!("plethysm {}_{a}[s_{nu}] disagrees", if exterior { "e" } else { "h" }))?;
                pleth += 1;
            }
        }
    }
    Ok(format!("Ext claims hold; {pleth} plethysms match substitution"))
}

fn weyl_construction() -> Check {
    let sigma: PartitionTuple = "2".parse().unwrap();
    let mut compared = 0;
    for (big, seed) in [(4usize, 40u64), (5, 50), (6, 60)] {
        let omega = ok(FormPoint::random(&sigma, big, seed))?;
        for lam in Partition::all_up_to(3) {
            let got = ok(simple_realization_dim(&sigma, &omega, &lam))?;
            let want = traceless_oracle(&omega, &lam) as u64;
            ensure(got == want, || format!("N={big} λ={lam}: {got} vs oracle {want}"))?;
            if big == 5 {
                let fixture = match lam.parts() {
                    [2] => Some(14),
                    [1, 1] => Some(10),
                    [1, 1, 1] => Some(10),
                    _ => None,
                };
                if let Some(f) = fixture {
                    ensure(got == f, || format!("N=5 λ={lam}: {got}, expected {f}"))?;
                }
            }
            ensure(ok(socle_check(&sigma, &omega, &lam))?, || format!("socle check fails at N={big} λ={lam}"))?;
            compared += 1;
        }
    }
    Ok(format!("{compared} (N, λ) cases agree with the brute-force kernel"))
}

fn specht_layer() -> Check {
    for n in 0..=6 {
        let shapes = Partition::all_of(n);
        for lam in &shapes {
            let b = SpechtBasis::new(lam);
            ensure(b.dim() as u64 == syt_count(lam.parts()), || format!("dim S^{lam}"))?;
            ok(SnRep::specht(lam).check_coxeter())?;
            for mu in &shapes {
                let mut s = Rational::from_integer(0.into());
                for rho in &shapes {
                    let x = ok(sn_character(lam, rho))? * ok(sn_character(mu, rho))?;
                    s += Rational::new(x.into(), rho.z().into());
                }
                ensure(s == rat(i64::from(lam == mu)), || format!("⟨χ^{lam}, χ^{mu}⟩ = {s}"))?;
            }
        }
    }
    // traces of the explicit matrices reproduce the character table
    for n in 1..=5 {
        for lam in Partition::all_of(n) {
            let rep = SnRep::specht(&lam);
            let mut mismatch = None;
            ok(rep.for_each_element(|w, m| {
                let class = sigma_brauer::combinat::cycle_type(w.images());
                if m.trace() != rat(sn_character(&lam, &class).unwrap()) {
                    mismatch = Some(class);
                }
            }))?;
            ensure(mismatch.is_none(), || format!("trace of S^{lam} off on class {mismatch:?}"))?;
        }
    }
    Ok("dims, Coxeter relations, orthogonality for n <= 6".into())
}

fn germinal_and_linearity() -> Check {
    let cubic: PartitionTuple = "3".parse().unwrap();
    let mut samples = 0;
    for (big, seed) in [(3usize, 1u64), (4, 2), (5, 3)] {
        let omega = ok(FormPoint::random(&cubic, big, seed))?;
        let levels: Vec<usize> = (0..=big).collect();
        for r in ok(germinal_axiom_suite(&omega, &levels, 100, seed, &[]))? {
            ensure(r.all_passed() && r.samples >= 100, || format!("generic M={big}: {r:?}"))?;
            samples += r.samples;
        }
    }
    let mono = ok(FormPoint::from_layout(&cubic, 3, |_, a, _| if a == [0, 1, 2] { rat(1) } else { rat(0) }))?;
    for r in ok(germinal_axiom_suite(&mono, &[0, 1, 2, 3], 100, 9, &monomial_symmetries()))? {
        ensure(r.all_passed() && r.samples >= 100, || format!("x1x2x3: {r:?}"))?;
        samples += r.samples;
    }

    // valid fixtures
    let mut valid = 0;
    let unit = |rank: usize, word: &[usize]| {
        let mut v = vec![rat(0); rank.pow(word.len() as u32)];
        v[sigma_brauer::combinat::index_of(word, rank)] = rat(1);
        v
    };
    let generic = ok(FormPoint::random(&cubic, 3, 77))?;
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for word in [[0, 0, 0], [0, 1, 0], [1, 1, 0]] {
        let v = unit(3, &word);
        let phi = ok(MapPresentation::form_evaluation(&cubic, 0, 0, 3, &v))?;
        for _ in 0..5 {
            let g = sample_g(&mut rng, 2, 3);
            ensure(ok(gamma_linearity_check(&cubic, &generic, &phi, 2, &g, &v, 3, LinearityMode::Strict))?, || "G(2) fixture".into())?;
            valid += 1;
        }
    }
    let mut v = unit(3, &[0, 1, 2]);
    v[sigma_brauer::combinat::index_of(&[1, 1, 2], 3)] = rat(2);
    let phi = ok(MapPresentation::form_evaluation(&cubic, 0, 0, 3, &v))?;
    for g in monomial_symmetries() {
        ensure(ok(gamma_linearity_check(&cubic, &mono, &phi, 3, &g, &v, 3, LinearityMode::Strict))?, || "x1x2x3 fixture".into())?;
        valid += 1;
    }
    let d = ok(hom_basis(&cubic, 4, 1))?;
    let f = ok(Morphism::basis(&cubic, d[2].clone()))?;
    let v4 = unit(3, &[2, 0, 1, 1]);
    let phi = ok(MapPresentation::from_morphism(&f, 3, &v4))?;
    for g in monomial_symmetries() {
        ensure(ok(gamma_linearity_check(&cubic, &mono, &phi, 3, &g, &v4, 4, LinearityMode::Strict))?, || "diagram fixture".into())?;
        valid += 1;
    }

    // negative control: g swaps e1, e2, which a generic cubic notices at level 2
    let swap = GLElement::permutation(&[1, 0]);
    let v = unit(3, &[0, 0, 0]);
    let phi = ok(MapPresentation::form_evaluation(&cubic, 0, 0, 3, &v))?;
    let strict = gamma_linearity_check(&cubic, &generic, &phi, 2, &swap, &v, 3, LinearityMode::Strict);
    ensure(matches!(strict, Err(Error::Precondition(_))), || format!("strict mode accepted g ∉ Γ: {strict:?}"))?;
    let control = ok(gamma_linearity_check(&cubic, &generic, &phi, 2, &swap, &v, 3, LinearityMode::Evaluate))?;
    ensure(!control, || "negative control returned true".into())?;
    Ok(format!("{samples} axiom samples, {valid} valid fixtures true, control false"))
}

fn cli_determinism() -> Check {
    let n = support::check_examples()?;
    Ok(format!("{n} examples byte-identical across two runs"))
}

fn main() {
    let criteria: [(&str, fn() -> Check, Option<Duration>); 11] = [
        ("step-1 diagram/weight-space equality", step1_oracle, Some(Duration::from_secs(60))),
        ("classical Brauer counts", brauer_counts, None),
        ("category laws", category_laws, None),
        ("θ functoriality", theta_functoriality, None),
        ("shift invariant", shift_invariant, None),
        ("multiplicity theorem", multiplicity_theorem, None),
        ("Ext corollary and plethysm oracle", ext_corollary, Some(Duration::from_secs(120))),
        ("Weyl construction", weyl_construction, Some(Duration::from_secs(300))),
        ("Specht layer", specht_layer, None),
        ("germinal axioms and Γ-linearity", germinal_and_linearity, None),
        ("CLI determinism", cli_determinism, None),
    ];
    let mut failed = 0;
    for (i, (name, run, limit)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(run).unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed();
        let outcome = match (outcome, limit) {
            (Ok(_), Some(l)) if elapsed > *l => Err(format!("took {elapsed:.1?}, limit {l:?}")),
            (o, _) => o,
        };
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS  {name} ({elapsed:.2?}): {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name} ({elapsed:.2?}): {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}

//! Acceptance checks. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails. Set `NICHOLS_SEED` to replay a different
//! random stream.

use std::process::ExitCode;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use nichols::analyzer::{
    diophantine_search, freeness_check, is_exceptional_degree, kernel_dim, minimal_degenerate_degrees,
    n1_n2, p_value, ExponentBraiding, ExponentMode, N1N2,
};
use nichols::field::{Cyclo, CyclotomicField, RatFunc};
use nichols::laurent::{a_cofactor, a_form, radical_identity_check, LaurentPoly};
use nichols::ring::{Field, Ring};
use nichols::shuffle::{
    braid_identity_check, cycle2_corank, cycle2_det, cycle2_matrix, cycle_corank, cycle_det, cycle_matrix,
    random_cyclotomic_braiding, random_rational_braiding, s1_matrix, BraidingMatrix,
};
use nichols::words::{lyndon_count, lyndon_inequality, DegreeVector};
use nichols::DEFAULT_SEED;

type Outcome = Result<String, String>;

fn dv(v: &[u32]) -> DegreeVector {
    DegreeVector::new(v.to_vec()).unwrap()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn e<E: std::fmt::Display>(err: E) -> String {
    err.to_string()
}

/// `q_11 = q_22 = q_12 q_21 = ζ_5`.
fn zeta5_braiding() -> BraidingMatrix<Cyclo> {
    ExponentBraiding::new(vec![vec![1, 1], vec![0, 1]], ExponentMode::RootOfUnity(5))
        .unwrap()
        .to_cyclotomic()
        .unwrap()
}

fn zeta5(k: i64) -> Cyclo {
    Cyclo::zeta_pow(&CyclotomicField::new(5), k)
}

/// Degrees with `1 <= |m| <= d` (or `2 <=`), n letters.
fn degrees(n: usize, lo: u32, hi: u32) -> Vec<DegreeVector> {
    DegreeVector::graded(n, lo, hi)
}

fn two_letter(hi: u32) -> Vec<DegreeVector> {
    degrees(2, 2, hi).into_iter().filter(|m| m.nonzero_count() == 2).collect()
}

fn zeta5_counts(_seed: u64) -> Outcome {
    let start = Instant::now();
    let ells = [([2, 4], 2), ([3, 3], 3), ([3, 4], 5)];
    for (m, expected) in ells {
        let got = lyndon_count(&dv(&m)).map_err(e)?;
        ensure(got == expected, || format!("l{:?} = {got}, expected {expected}", m))?;
    }
    let m = dv(&[3, 4]);
    let big_n = m.big_n().map_err(e)?;
    ensure(big_n == 6, || format!("N(3,4) = {big_n}"))?;
    let q = zeta5_braiding();
    let counts = n1_n2(&q, &m).map_err(e)?;
    let expected = N1N2 { n1: 7, n2: 5, d: 1, d_prime: 6 };
    ensure(counts == expected, || format!("{counts:?}"))?;
    let s = s1_matrix(6, &m, &q).map_err(e)?;
    let brute = s.kernel_dim();
    ensure(brute == 2, || format!("brute-force kernel {brute}"))?;
    let report = kernel_dim(&q, &m, false, false).map_err(e)?;
    ensure(report.kernel_dim_formula == 2, || format!("{report:?}"))?;
    let secs = start.elapsed().as_secs_f64();
    ensure(secs < 10.0, || format!("took {secs:.1}s"))?;
    Ok(format!(
        "l(2,4)=2 l(3,3)=3 l(3,4)=5 N=6 d=1 d'=6 n1=7 n2=5, kernel 2 on dim {} ({secs:.2}s)",
        s.cols()
    ))
}

fn zeta5_values(_seed: u64) -> Outcome {
    let q = zeta5_braiding();
    let one = zeta5(0);
    let z = |k| zeta5(k);
    let listed: Vec<([u32; 2], Cyclo)> = vec![
        ([3, 3], one.clone() + z(2) + z(4)),
        ([3, 2], one.clone() - z(2)),
        ([3, 1], one.clone() - z(3)),
        ([1, 2], one.clone() - z(2)),
        ([1, 1], one.clone() - z(1)),
        ([2, 4], one.clone() - z(1)),
        ([1, 4], one.clone() - z(4)),
        ([2, 2], one.clone() + z(4)),
    ];
    let mut mismatches = Vec::new();
    for (m, expected) in &listed {
        let got = p_value(&dv(m), &q).map_err(e)?;
        ensure(!got.is_zero(), || format!("P{m:?}(q) vanishes"))?;
        if got != *expected {
            mismatches.push(format!("P{m:?}(q) = {got}, listed {expected}"));
        }
    }
    // The determinant ratio det S_(1,5)|V_(2,4) / prod_i det S_(1,4)|V_((2,4)-e_i)
    // is A_(2,4)(q) and does not depend on the formula for P_m.
    let m = dv(&[2, 4]);
    let top = s1_matrix(5, &m, &q).map_err(e)?.det().map_err(e)?;
    let mut lower = one.clone();
    for i in 0..2 {
        let l = m.minus_unit(i).unwrap();
        lower = lower * s1_matrix(4, &l, &q).map_err(e)?.det().map_err(e)?;
    }
    let ratio = top * lower.inv().ok_or("lower shuffle determinant vanishes")?;
    if mismatches.is_empty() {
        return Ok("8 listed forms match exactly, all nonzero".into());
    }
    Err(format!(
        "{}; all 8 values are nonzero; brute-force determinant ratio at (2,4) = {ratio}, \
         which agrees with the defining formula (Q(q) = q^11 = q, even exponent 4) and not with the listed form",
        mismatches.join("; ")
    ))
}

fn basic_identity(seed: u64) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut checks = 0;
    for n in [2, 3] {
        for _ in 0..20 {
            let q = random_rational_braiding(n, &mut rng);
            for m in degrees(n, 2, 6) {
                for k in 1..m.total() as usize {
                    let ok = braid_identity_check(k, &m, &q).map_err(e)?;
                    ensure(ok, || format!("fails at n={n}, m={m}, k={k}"))?;
                    checks += 1;
                }
            }
        }
    }
    Ok(format!("{checks} matrix identities, 20 braidings each for n=2,3, |m|<=6"))
}

fn cyclic_operators(seed: u64) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x4);
    let mut dets = 0;
    for (n, hi) in [(2, 7), (3, 5)] {
        for _ in 0..3 {
            let q = random_rational_braiding(n, &mut rng);
            for m in degrees(n, 1, hi) {
                let brute = cycle_matrix(&m, &q).map_err(e)?.det().map_err(e)?;
                let closed = cycle_det(&m, &q).map_err(e)?;
                ensure(brute == closed, || format!("first operator at {m}: {brute} vs {closed}"))?;
                dets += 1;
                if m.total() >= 2 {
                    let brute = cycle2_matrix(&m, &q).map_err(e)?.det().map_err(e)?;
                    let closed = cycle2_det(&m, &q).map_err(e)?;
                    ensure(brute == closed, || format!("second operator at {m}: {brute} vs {closed}"))?;
                    dets += 1;
                }
            }
        }
    }
    let mut coranks = 0;
    let mut singular = 0;
    for order in 2..=6u64 {
        for _ in 0..4 {
            for (n, hi) in [(2, 7), (3, 5)] {
                let q = random_cyclotomic_braiding(n, order, &mut rng);
                for m in degrees(n, 1, hi) {
                    let brute = cycle_matrix(&m, &q).map_err(e)?.kernel_dim();
                    let closed = cycle_corank(&m, &q).map_err(e)?;
                    ensure(brute == closed, || format!("first corank at N={order}, {m}: {brute} vs {closed}"))?;
                    coranks += 1;
                    singular += usize::from(brute > 0);
                    if m.total() >= 2 {
                        let brute = cycle2_matrix(&m, &q).map_err(e)?.kernel_dim();
                        let closed = cycle2_corank(&m, &q).map_err(e)?;
                        ensure(brute == closed, || {
                            format!("second corank at N={order}, {m}: {brute} vs {closed}")
                        })?;
                        coranks += 1;
                        singular += usize::from(brute > 0);
                    }
                }
            }
        }
    }
    Ok(format!(
        "{dets} determinants at rational braidings, {coranks} coranks at N=2..6 ({singular} nonzero)"
    ))
}

fn shuffle_recursion(seed: u64) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5);
    let mut checks = 0;
    for _ in 0..3 {
        let q = random_rational_braiding(2, &mut rng);
        for m in two_letter(6) {
            let ok = nichols::shuffle::detshuffle_recursion_check(&m, &q).map_err(e)?;
            ensure(ok, || format!("fails at {m}"))?;
            checks += 1;
        }
    }
    Ok(format!("{checks} recursions over 3 rational braidings, |m|<=6"))
}

fn radical_identity(_seed: u64) -> Outcome {
    let degs = two_letter(8);
    for m in &degs {
        ensure(radical_identity_check(m).map_err(e)?, || format!("fails at {m}"))?;
    }
    // Cofactors A_m / P_m expanded: 1 - Q, (3)_Q, 1 + Q^2.
    let cases: [([u32; 2], Vec<i64>); 3] = [([3, 4], vec![1, -1]), ([3, 6], vec![1, 1, 1]), ([4, 4], vec![1, 0, 1])];
    for (m, coeffs) in cases {
        let m = dv(&m);
        let c = a_cofactor(&m).map_err(e)?;
        let expected = LaurentPoly::from_univariate(
            &coeffs.iter().map(|&x| x.into()).collect::<Vec<_>>(),
            &c.base,
        );
        let got = c.expand().map_err(e)?;
        ensure(got == expected, || format!("cofactor at {m}: {got}"))?;
        let a = a_form(&m).map_err(e)?.expand().map_err(e)?;
        let p = nichols::laurent::p_poly(&m).map_err(e)?;
        ensure(&expected * &p == a, || format!("A != cofactor * P at {m}"))?;
    }
    Ok(format!("{} degrees with |m|<=8; cofactors 1-Q, (3)_Q, 1+Q^2", degs.len()))
}

fn lyndon_bound(_seed: u64) -> Outcome {
    let mut count = 0;
    let mut equal = 0;
    for n in [2, 3] {
        for m in degrees(n, 2, 12).into_iter().filter(|m| m.nonzero_count() >= 2) {
            let r = lyndon_inequality(&m).map_err(e)?;
            ensure(r.lhs <= r.rhs, || format!("{m}: {} > {}", r.lhs, r.rhs))?;
            ensure(r.equality == r.expected_equality, || {
                format!("{m}: equality {} but classification predicts {}", r.equality, r.expected_equality)
            })?;
            count += 1;
            equal += usize::from(r.equality);
        }
    }
    Ok(format!("{count} degrees, {equal} equalities, all in the predicted cases"))
}

fn transcendental_zeros(a: &ExponentBraiding, bound: u32) -> Result<Vec<DegreeVector>, String> {
    let q: BraidingMatrix<RatFunc> = a.to_transcendental().map_err(e)?;
    let mut zeros = Vec::new();
    for m in nichols::analyzer::box_degrees(a.n(), bound) {
        if m.total() >= 2 && p_value(&m, &q).map_err(e)?.is_zero() {
            zeros.push(m);
        }
    }
    Ok(zeros)
}

fn diophantine(_seed: u64) -> Outcome {
    let free = [(2, 1), (3, 1)];
    for (a, b) in free {
        let x = ExponentBraiding::two_parameter(a, b, ExponentMode::Transcendental).map_err(e)?;
        let sols = diophantine_search(&x, 50).map_err(e)?;
        ensure(sols.is_empty(), || format!("a={a}, b={b}: solutions {sols:?}"))?;
        let report = freeness_check(&x.to_transcendental().map_err(e)?, 12).map_err(e)?;
        ensure(report.is_free(), || format!("a={a}, b={b}: witnesses {:?}", report.witnesses))?;
    }
    let t = ExponentMode::Transcendental;
    let mut matrices = vec![
        ExponentBraiding::two_parameter(2, 1, t).unwrap(),
        ExponentBraiding::two_parameter(3, 1, t).unwrap(),
        ExponentBraiding::two_parameter(1, 1, t).unwrap(),
        ExponentBraiding::two_parameter(2, 3, t).unwrap(),
        ExponentBraiding::new(vec![vec![1, 0], vec![0, 1]], t).unwrap(),
        ExponentBraiding::new(vec![vec![-2, 1], vec![2, 1]], t).unwrap(),
        ExponentBraiding::new(vec![vec![1, -1], vec![0, 2]], t).unwrap(),
    ];
    let three = ExponentBraiding::new(vec![vec![2, -1, 0], vec![0, 2, -1], vec![0, 0, 2]], t).unwrap();
    let mut solutions = 0;
    for (x, bound) in matrices.drain(..).map(|x| (x, 50)).chain([(three, 12)]) {
        let sols = diophantine_search(&x, bound).map_err(e)?;
        let zeros = transcendental_zeros(&x, bound)?;
        ensure(sols == zeros, || format!("a={:?}: K=lambda {sols:?} vs P_m(t)=0 {zeros:?}", x.a))?;
        for m in &zeros {
            ensure(!is_exceptional_degree(m).map_err(e)?, || format!("exceptional zero {m}"))?;
        }
        solutions += sols.len();
    }
    Ok(format!(
        "a>b families free (box 50, P_m(t) up to |m|=12); 8 exponent matrices agree, {solutions} solutions total"
    ))
}

fn kernel_consistency(seed: u64) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9);
    let mut cases: Vec<(String, BraidingMatrix<Cyclo>, u32)> = vec![("zeta_5".into(), zeta5_braiding(), 7)];
    for i in 0..10 {
        let order = rng.gen_range(2..=6);
        let q = random_cyclotomic_braiding(2, order, &mut rng);
        cases.push((format!("random #{i} N={order} a={:?}", q.exponents().unwrap()), q, 6));
    }
    let mut checked = 0;
    let mut saw_34 = false;
    for (label, q, bound) in cases {
        let degs = minimal_degenerate_degrees(&q, bound).map_err(e)?;
        for m in degs {
            let r = kernel_dim(&q, &m, true, true).map_err(|err| format!("{label}, {m}: {err}"))?;
            let all = [Some(r.kernel_dim_formula), r.kernel_dim_bruteforce, r.relation_dim];
            ensure(all.iter().all(|&x| x == Some(r.kernel_dim_formula)), || format!("{label}: {r:?}"))?;
            saw_34 |= label == "zeta_5" && m == dv(&[3, 4]);
            checked += 1;
        }
    }
    ensure(saw_34, || "(3,4) not found at the zeta_5 braiding".into())?;
    Ok(format!("{checked} minimal degenerate degrees, formula = shuffle kernel = symmetrizer kernel"))
}

type Criterion = (&'static str, fn(u64) -> Outcome);

fn main() -> ExitCode {
    let seed = std::env::var("NICHOLS_SEED")
        .ok()
        .and_then(|s| {
            let s = s.trim_start_matches("0x");
            u64::from_str_radix(s, 16).ok()
        })
        .unwrap_or(DEFAULT_SEED);
    println!("acceptance seed 0x{seed:X}");
    let criteria: [Criterion; 9] = [
        ("zeta_5 braiding: Lyndon counts, n1, n2 and kernel at (3,4)", zeta5_counts),
        ("zeta_5 braiding: P_l(q) below (3,4)", zeta5_values),
        ("basic braid identity under rho", basic_identity),
        ("cyclic operators: closed-form determinants and coranks", cyclic_operators),
        ("shuffle determinant recursion", shuffle_recursion),
        ("radical of A_m is P_m", radical_identity),
        ("Lyndon count inequality and equality cases", lyndon_bound),
        ("diophantine criterion for exponent braidings", diophantine),
        ("kernel formula, shuffle kernel and symmetrizer kernel agree", kernel_consistency),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(|| check(seed)).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {} {name}: {detail} [{secs:.1}s]", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {} {name}: {detail} [{secs:.1}s]", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}

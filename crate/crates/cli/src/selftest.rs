//! Quick, seeded runs of the main invariants.

use anyhow::{ensure, Result};
use nichols::analyzer::{
    box_degrees, diophantine_search, is_exceptional_degree, kernel_dim, minimal_degenerate_degrees, p_value,
    ExponentBraiding, ExponentMode,
};
use nichols::arith::divisors;
use nichols::laurent::radical_identity_check;
use nichols::ring::Ring;
use nichols::shuffle::{
    braid_identity_check, cycle2_det, cycle2_matrix, cycle_det, cycle_matrix, detshuffle_recursion_check,
    random_cyclotomic_braiding, random_rational_braiding,
};
use nichols::words::{lyndon_count, DegreeVector};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub struct Check {
    pub name: &'static str,
    pub outcome: Result<String>,
}

fn degrees(n: usize, lo: u32, hi: u32) -> Vec<DegreeVector> {
    DegreeVector::graded(n, lo, hi)
}

fn word_counts() -> Result<String> {
    let mut checked = 0;
    for n in 2..=3 {
        for m in degrees(n, 1, 8) {
            // Every word is a power of a unique Lyndon word, up to rotation.
            let mut total = 0;
            for d in divisors(m.gcd()? as u64) {
                let part = m.div(d as u32).expect("d divides gcd");
                total += (m.total() as u64 / d) * lyndon_count(&part)?;
            }
            ensure!(total == m.multinomial(), "word count mismatch at {m}");
            checked += 1;
        }
    }
    Ok(format!("{checked} degrees"))
}

fn radical() -> Result<String> {
    let mut checked = 0;
    for m in degrees(2, 2, 8).into_iter().filter(|m| m.nonzero_count() == 2) {
        ensure!(radical_identity_check(&m)?, "radical identity fails at {m}");
        checked += 1;
    }
    Ok(format!("{checked} degrees"))
}

fn braid_identity(rng: &mut ChaCha8Rng) -> Result<String> {
    let mut checked = 0;
    for n in 2..=3 {
        let q = random_rational_braiding(n, rng);
        for m in degrees(n, 2, 5) {
            for k in 1..m.total() as usize {
                ensure!(braid_identity_check(k, &m, &q)?, "identity fails at k={k}, m={m}");
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} (k, m) pairs"))
}

fn cyclic(rng: &mut ChaCha8Rng) -> Result<String> {
    let mut checked = 0;
    for n in 2..=3 {
        let q = random_rational_braiding(n, rng);
        for m in degrees(n, 2, 5) {
            ensure!(cycle_matrix(&m, &q)?.det()? == cycle_det(&m, &q)?, "first operator at {m}");
            ensure!(cycle2_matrix(&m, &q)?.det()? == cycle2_det(&m, &q)?, "second operator at {m}");
            checked += 1;
        }
    }
    Ok(format!("{checked} degrees"))
}

fn recursion(rng: &mut ChaCha8Rng) -> Result<String> {
    let q = random_rational_braiding(2, rng);
    let mut checked = 0;
    for m in degrees(2, 2, 6).into_iter().filter(|m| m.nonzero_count() == 2) {
        ensure!(detshuffle_recursion_check(&m, &q)?, "recursion fails at {m}");
        checked += 1;
    }
    Ok(format!("{checked} degrees"))
}

fn kernels(rng: &mut ChaCha8Rng) -> Result<String> {
    let mut checked = 0;
    for _ in 0..4 {
        let order = rng.gen_range(2..=6);
        let q = random_cyclotomic_braiding(2, order, rng);
        for m in minimal_degenerate_degrees(&q, 5)? {
            kernel_dim(&q, &m, true, true)?;
            checked += 1;
        }
    }
    Ok(format!("{checked} minimal degenerate degrees"))
}

fn diophantine(rng: &mut ChaCha8Rng) -> Result<String> {
    let mut a = vec![vec![0i64; 2]; 2];
    for (i, row) in a.iter_mut().enumerate() {
        for (j, x) in row.iter_mut().enumerate() {
            *x = if i == j {
                *[-3, -2, -1, 1, 2, 3].get(rng.gen_range(0..6)).expect("in range")
            } else {
                rng.gen_range(-3..=3)
            };
        }
    }
    let braiding = ExponentBraiding::new(a.clone(), ExponentMode::Transcendental)?;
    let q = braiding.to_transcendental()?;
    let solutions = diophantine_search(&braiding, 8)?;
    for m in box_degrees(2, 8) {
        if m.total() < 2 || is_exceptional_degree(&m)? {
            continue;
        }
        let zero = p_value(&m, &q)?.is_zero();
        ensure!(zero == solutions.contains(&m), "exponents {a:?}: mismatch at {m}");
    }
    Ok(format!("exponents {a:?}, {} solutions in box 8", solutions.len()))
}

pub fn run(seed: u64) -> Vec<Check> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    vec![
        Check { name: "lyndon counts", outcome: word_counts() },
        Check { name: "radical identity", outcome: radical() },
        Check { name: "braid identity", outcome: braid_identity(&mut rng) },
        Check { name: "cyclic determinants", outcome: cyclic(&mut rng) },
        Check { name: "shuffle recursion", outcome: recursion(&mut rng) },
        Check { name: "kernel formula", outcome: kernels(&mut rng) },
        Check { name: "diophantine criterion", outcome: diophantine(&mut rng) },
    ]
}

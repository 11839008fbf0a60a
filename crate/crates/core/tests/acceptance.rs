//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

use std::collections::{BTreeSet, HashSet};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use ratcode::gf::FieldSpec;
use ratcode::rfcode::{
    brute_force_code, count_survivors, hamming_distance, point_list, sample_forbidden, Code,
    CodeParams, Codeword, ProjectiveValue,
};
use ratcode::zeta::{
    self, closed_points, euler_product, jacobian_size, m_closed_form, rho0, rho1, CountTables,
    LPolynomial, TABLE_Q,
};

type Check = Result<String, String>;
type Criterion = (&'static str, Duration, fn() -> Check);

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        let holds: bool = $cond;
        if !holds {
            return Err(format!($($fmt)+));
        }
    };
}

fn code(q: u64, h: usize) -> Code {
    let spec = FieldSpec::new(factor(q).0, factor(q).1, None).unwrap();
    Code::new(&CodeParams::new(&spec, h).unwrap()).unwrap()
}

fn factor(q: u64) -> (u64, u32) {
    let p = (2..=q).find(|&p| q.is_multiple_of(p)).unwrap();
    let mut alpha = 0;
    let mut r = q;
    while r.is_multiple_of(p) {
        r /= p;
        alpha += 1;
    }
    assert_eq!(r, 1, "{q} is not a prime power");
    (p, alpha)
}

fn rho1_table() -> Check {
    const WANT: [f64; 10] = [
        4.3461, 1.8541, 1.1606, 0.8348, 0.5276, 0.4440, 0.3827, 0.2990, 0.2448, 0.1919,
    ];
    let mut worst: f64 = 0.0;
    for (&q, &want) in TABLE_Q.iter().zip(&WANT) {
        let got = rho1(q).map_err(|e| e.to_string())?.value;
        ensure!(
            (got - want).abs() < 1e-4,
            "rho1({q}) = {got:.6}, table {want}"
        );
        worst = worst.max((got - want).abs());
    }
    Ok(format!("10 values, max deviation {worst:.2e}"))
}

fn code_sizes() -> Check {
    for (q, h) in [(2, 1), (3, 1), (4, 1), (5, 1), (5, 2)] {
        let c = code(q, h);
        let expect = q.pow(2 * h as u32 + 1);
        let brute = brute_force_code(c.params()).map_err(|e| e.to_string())?;
        let words: HashSet<Codeword> = c.enumerate().map(|(_, w)| w).collect();
        let from_messages: BTreeSet<_> = (0..c.messages().size())
            .map(|m| c.message_function(m).unwrap())
            .collect();
        ensure!(
            brute.len() as u64 == expect,
            "({q},{h}): brute force {}",
            brute.len()
        );
        ensure!(
            words.len() as u64 == expect,
            "({q},{h}): enumerate {}",
            words.len()
        );
        ensure!(
            from_messages == brute,
            "({q},{h}): message functions differ from brute force"
        );
    }
    Ok("q^(2h+1) at (2,1) (3,1) (4,1) (5,1) (5,2)".into())
}

fn distance_bound() -> Check {
    let mut pairs = 0usize;
    for (q, h) in [(2, 1), (3, 1), (5, 1)] {
        let c = code(q, h);
        let fs: Vec<_> = brute_force_code(c.params()).unwrap().into_iter().collect();
        let words: Vec<_> = fs.iter().map(|f| c.codeword(f)).collect();
        let n = c.params().n();
        let mut min_distance = usize::MAX;
        for i in 0..fs.len() {
            for j in i + 1..fs.len() {
                let d = hamming_distance(&words[i], &words[j]).unwrap();
                let agree = n - d;
                ensure!(
                    agree <= fs[i].degree() + fs[j].degree(),
                    "({q},{h}): {} and {} agree at {agree} points",
                    fs[i],
                    fs[j]
                );
                min_distance = min_distance.min(d);
                pairs += 1;
            }
        }
        ensure!(
            min_distance >= n - 2 * h,
            "({q},{h}): distance {min_distance}"
        );
    }
    Ok(format!("{pairs} pairs"))
}

fn decoder_completeness() -> Check {
    let c = code(7, 1);
    let n = c.params().n();
    let alphabet = point_list(c.params().spec());
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut decodes = 0usize;
    let words: Vec<_> = c.enumerate().collect();
    for e in 0..=2usize {
        let patterns: Vec<Vec<usize>> = match e {
            0 => vec![vec![]],
            1 => (0..n).map(|i| vec![i]).collect(),
            _ => (0..n)
                .flat_map(|i| (i + 1..n).map(move |j| vec![i, j]))
                .collect(),
        };
        for (m, w) in &words {
            let f = c.message_function(*m).unwrap();
            for pattern in &patterns {
                let draws = if e == 0 { 1 } else { 3 };
                for _ in 0..draws {
                    let mut symbols = w.symbols().to_vec();
                    for &i in pattern {
                        // a wrong symbol: uniform over the other q letters
                        let k = rng.random_range(0..alphabet.len() - 1);
                        let pos = alphabet.iter().position(|&a| a == symbols[i]).unwrap();
                        symbols[i] = alphabet[if k >= pos { k + 1 } else { k }];
                    }
                    let got = c.decode(&Codeword::new(symbols), e);
                    ensure!(
                        got.as_ref() == Ok(&f),
                        "m = {m}, errors at {pattern:?}: {got:?}"
                    );
                    decodes += 1;
                }
            }
        }
    }
    Ok(format!("{decodes} decodes at q=7 h=1, e <= 2, no failures"))
}

fn iota_bijection() -> Check {
    for (q, h) in [(2, 1), (3, 1), (5, 1)] {
        let c = code(q, h);
        for m in 0..c.messages().size() {
            let f = c.message_function(m).unwrap();
            ensure!(
                c.encode(m).unwrap() == c.codeword(&f),
                "({q},{h}) m = {m}: encode mismatch"
            );
            let back = c.iota(&f).map_err(|e| e.to_string())?;
            ensure!(back == m, "({q},{h}): iota(encode({m})) = {back}");
        }
        let brute = brute_force_code(c.params()).unwrap();
        let images: HashSet<u64> = brute.iter().map(|f| c.iota(f).unwrap()).collect();
        ensure!(images.len() == brute.len(), "({q},{h}): iota not injective");
    }
    Ok("round trip and injectivity at (2,1) (3,1) (5,1)".into())
}

/// Projective points of `y^2 + a1 x y + a3 y = f(x)` over `field`, for a
/// model with a single point at infinity.
fn count_points(field: &FieldSpec, a1: u64, a3: u64, f: &[u64]) -> u64 {
    let q = field.size();
    let mut count = 1;
    for x in 0..q {
        let rhs = f
            .iter()
            .rev()
            .fold(0, |acc, &c| field.add(field.mul(acc, x), c));
        let lin = field.add(field.mul(a1, x), a3);
        for y in 0..q {
            let lhs = field.add(field.mul(y, y), field.mul(lin, y));
            if lhs == rhs {
                count += 1;
            }
        }
    }
    count
}

/// `L` of a genus-`g` curve from `N_1..N_g` (Newton's identities).
fn l_from_counts(q: u64, counts: &[u64]) -> LPolynomial {
    let g = counts.len();
    let s: Vec<BigInt> = counts
        .iter()
        .enumerate()
        .map(|(i, &n)| BigInt::from(q).pow(i as u32 + 1) + 1 - n)
        .collect();
    let mut c = vec![BigInt::from(1)];
    for m in 1..=g {
        let acc: BigInt = (0..m).map(|i| &c[i] * &s[m - i - 1]).sum();
        c.push(-acc / m);
    }
    for i in (0..g).rev() {
        c.push(&c[i] * BigInt::from(q).pow((g - i) as u32));
    }
    LPolynomial::new(q, g, c).unwrap()
}

fn counting_identities() -> Check {
    let gf2 = |m| FieldSpec::new(2, m, None).unwrap();
    let gf5 = |m| FieldSpec::new(5, m, None).unwrap();
    // y^2 + y = x^3 over GF(2), y^2 = x^3 + x + 1 over GF(5), y^2 + y = x^5 over GF(2)
    let e2 = |m| count_points(&gf2(m), 0, 1, &[0, 0, 0, 1]);
    let e5 = |m| count_points(&gf5(m), 0, 0, &[1, 1, 0, 1]);
    let c2 = |m| count_points(&gf2(m), 0, 1, &[0, 0, 0, 0, 0, 1]);
    let curves = [
        (l_from_counts(2, &[e2(1)]), vec![e2(2), e2(3), e2(4)]),
        (l_from_counts(5, &[e5(1)]), vec![e5(2), e5(3)]),
        (l_from_counts(2, &[c2(1), c2(2)]), vec![c2(3), c2(4)]),
    ];
    ensure!(
        jacobian_size(&curves[0].0).unwrap() == BigInt::from(3),
        "#J over GF(2)"
    );
    ensure!(
        jacobian_size(&curves[1].0).unwrap() == BigInt::from(9),
        "#J over GF(5)"
    );
    let mut fixtures: Vec<LPolynomial> = [2, 3, 5, 7].map(LPolynomial::genus_zero).into();
    for (l, higher) in &curves {
        let cp = closed_points(l, 12).map_err(|e| e.to_string())?;
        for (i, &n) in higher.iter().enumerate() {
            let m = l.genus() + i + 1;
            ensure!(
                cp.point_count(m).to_u64() == Some(n),
                "q={}: N_{m} = {} but brute force gives {n}",
                l.q(),
                cp.point_count(m)
            );
        }
        fixtures.push(l.clone());
    }
    for l in &fixtures {
        let t = CountTables::new(l, 12);
        ensure!(
            zeta::convolution_holds(&t.m, &t.a),
            "convolution fails for {l:?}"
        );
        ensure!(t.is_consistent(), "negative counts for {l:?}");
        let cp = closed_points(l, 10).map_err(|e| e.to_string())?;
        ensure!(
            euler_product(&cp, 10) == t.m[..=10],
            "Euler product differs for {l:?}"
        );
        for n in (0..=12usize).filter(|&n| n + 2 > 2 * l.genus()) {
            let closed = m_closed_form(l, n).map_err(|e| e.to_string())?;
            ensure!(closed == t.m[n], "closed form M_{n} differs for {l:?}");
        }
    }
    Ok(format!(
        "{} L-polynomials; #J = 3, 9 from point counts",
        fixtures.len()
    ))
}

fn threshold_bounds() -> Check {
    let mut strict = 0;
    for q in [4, 9, 49] {
        for i in 1..=200 {
            let rho = 2.0 * i as f64 / 200.0;
            let b = zeta::b_rho(q, rho).map_err(|e| e.to_string())?.value;
            let upper = zeta::b_rho_upper(q, rho);
            ensure!(b <= upper + 1e-9, "q={q} rho={rho}: B = {b} > {upper}");
            if rho >= rho0(q) + 0.05 {
                ensure!(b <= upper - 1e-6, "q={q} rho={rho}: margin {}", upper - b);
                strict += 1;
            }
        }
    }
    for q in TABLE_Q {
        let r = rho1(q).map_err(|e| e.to_string())?.value;
        ensure!(r > rho0(q), "rho1({q}) = {r} <= {}", rho0(q));
    }
    Ok(format!(
        "600 grid points, {strict} strict; rho1 > 2q/(q^2-1) for all table q"
    ))
}

fn degradation() -> Check {
    const TRIALS: usize = 10_000;
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut report = Vec::new();
    for (q, h) in [(2u64, 1usize), (3, 1)] {
        let c = code(q, h);
        let words: Vec<Codeword> = c.enumerate().map(|(_, w)| w).collect();
        let counts: Vec<f64> = (0..TRIALS)
            .map(|_| {
                let forbidden: Vec<ProjectiveValue> = sample_forbidden(c.params(), &mut rng);
                count_survivors(&words, &forbidden) as f64
            })
            .collect();
        let mean = counts.iter().sum::<f64>() / TRIALS as f64;
        let var = counts.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / (TRIALS - 1) as f64;
        let se = (var / TRIALS as f64).sqrt();
        let size = BigInt::from(q.pow(2 * h as u32 + 1));
        let expect = zeta::degradation_expectation(q, c.params().n(), &size).approx;
        ensure!(
            (mean - expect).abs() <= 4.0 * se,
            "({q},{h}): mean {mean:.4} vs {expect:.4}, se {se:.4}"
        );
        report.push(format!("({q},{h}) {mean:.3} vs {expect:.3}"));
    }
    Ok(report.join(", "))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("rho1 table", Duration::from_secs(5), rho1_table),
        ("exact code size", Duration::from_secs(30), code_sizes),
        ("distance bound", Duration::from_secs(60), distance_bound),
        (
            "decoder completeness",
            Duration::from_secs(300),
            decoder_completeness,
        ),
        ("iota bijection", Duration::from_secs(300), iota_bijection),
        (
            "counting identities",
            Duration::from_secs(300),
            counting_identities,
        ),
        (
            "threshold bounds",
            Duration::from_secs(300),
            threshold_bounds,
        ),
        (
            "degradation expectation",
            Duration::from_secs(300),
            degradation,
        ),
    ];
    let mut failed = 0;
    for (i, (name, limit, run)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(msg) if elapsed > limit => {
                Err(format!("{msg}; took {elapsed:.2?}, limit {limit:?}"))
            }
            other => other,
        };
        match outcome {
            Ok(msg) => println!("PASS {} {name}: {msg} ({elapsed:.2?})", i + 1),
            Err(msg) => {
                failed += 1;
                println!("FAIL {} {name}: {msg} ({elapsed:.2?})", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", 8 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

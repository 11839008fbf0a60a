mod format;

use std::collections::HashSet;
use std::fs;
use std::io::{self, Read, Write};
use std::path::Path;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};
use thiserror::Error;

use ratcode::gf::FieldSpec;
use ratcode::rfcode::{
    brute_force_code, count_survivors, hamming_distance, sample_forbidden, Code, CodeError,
    CodeParams, Codeword, ProjectiveValue,
};
use ratcode::zeta::{self, CountTables, LPolynomial, RateBounds, ZetaError, TABLE_Q};

use format::{big_json, sig6};

/// Rational-function codes on the projective line: encoding, decoding,
/// exhaustive verification, divisor counts and threshold tables.
#[derive(Parser, Debug)]
#[command(name = "ratcode", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the codeword of message `m`.
    Encode {
        #[command(flatten)]
        code: CodeArgs,
        /// Message index in [0, q^(2h+1)).
        #[arg(long)]
        m: u64,
        #[arg(long, value_enum, default_value_t = Out::Csv)]
        out: Out,
    },
    /// Correct up to `e` errors in each word; one word per input line.
    Decode {
        #[command(flatten)]
        code: CodeArgs,
        /// Error budget; defaults to the largest e with 2(h+e) < N.
        #[arg(long)]
        e: Option<usize>,
        #[command(flatten)]
        word: WordArgs,
        #[arg(long, value_enum, default_value_t = Out::Csv)]
        out: Out,
    },
    /// Identify exact codewords; one word per input line.
    Recognize {
        #[command(flatten)]
        code: CodeArgs,
        #[command(flatten)]
        word: WordArgs,
        #[arg(long, value_enum, default_value_t = Out::Csv)]
        out: Out,
    },
    /// List every (message, function, codeword).
    Enumerate {
        #[command(flatten)]
        code: CodeArgs,
        #[arg(long, value_enum, default_value_t = Out::Csv)]
        out: Out,
    },
    /// Check size, distance and the message round trip against brute force.
    Verify {
        #[command(flatten)]
        code: CodeArgs,
        #[arg(long, value_enum, default_value_t = Out::Csv)]
        out: Out,
    },
    /// Divisor counts M_n and pair counts A_h from an L-polynomial.
    Zeta {
        /// JSON file (or inline JSON) `{"q": .., "genus": .., "coeffs": [..]}`.
        #[arg(long = "l-poly")]
        l_poly: String,
        #[arg(long, default_value_t = 10)]
        nmax: usize,
        #[arg(long, value_enum, default_value_t = Out::Csv)]
        out: Out,
    },
    /// Roots rho1(q) of B1(rho) = q^rho (q+1)/(q-1).
    Thresholds {
        #[arg(long, value_parser = parse_q, required_unless_present = "all_table", conflicts_with = "all_table")]
        q: Option<u64>,
        /// All ten reference field sizes.
        #[arg(long)]
        all_table: bool,
        #[arg(long, value_enum, default_value_t = Out::Csv)]
        out: Out,
    },
    /// Rate bounds over a grid of relative distances.
    Rates {
        #[arg(long, value_parser = parse_q)]
        q: u64,
        /// `start:stop:step`, inclusive.
        #[arg(long = "delta-grid", value_parser = parse_grid)]
        delta_grid: Grid,
        #[arg(long, value_enum, default_value_t = Out::Csv)]
        out: Out,
    },
    /// Forbid one letter per position and count surviving codewords.
    Degrade {
        #[command(flatten)]
        code: CodeArgs,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Explicit forbidden letters instead of a seeded draw.
        #[arg(long)]
        forbidden: Option<String>,
        #[arg(long, value_enum, default_value_t = Out::Csv)]
        out: Out,
    },
}

#[derive(Args, Debug)]
struct CodeArgs {
    /// Field size as `p^alpha`, optionally `p^alpha/modulus`.
    #[arg(long)]
    q: FieldSpec,
    #[arg(long)]
    h: usize,
}

#[derive(Args, Debug)]
struct WordArgs {
    /// Symbols, a file of words, or `-` for stdin (the default).
    #[arg(long)]
    word: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Out {
    Csv,
    Json,
}

#[derive(Debug, Error)]
enum CliError {
    #[error(transparent)]
    Code(#[from] CodeError),
    #[error(transparent)]
    Zeta(#[from] ZetaError),
    #[error("Io: {0}")]
    Io(#[from] io::Error),
    #[error("NoSolution: not a codeword: {0}")]
    NotACodeword(String),
    #[error("VerificationFailed: {0}")]
    Verify(String),
}

/// A field size given as `q` or `p^alpha`.
fn parse_q(s: &str) -> Result<u64, String> {
    let q = match s.split_once('^') {
        Some((p, a)) => {
            let (p, a): (u64, u32) = (
                p.parse().map_err(|_| format!("bad base {p:?}"))?,
                a.parse().map_err(|_| format!("bad exponent {a:?}"))?,
            );
            p.checked_pow(a).ok_or("field size overflows")?
        }
        None => s.parse().map_err(|_| format!("bad field size {s:?}"))?,
    };
    if q < 2 {
        return Err(format!("field size {q} < 2"));
    }
    Ok(q)
}

#[derive(Clone, Debug)]
struct Grid(Vec<f64>);

fn parse_grid(s: &str) -> Result<Grid, String> {
    let parts: Vec<f64> = s
        .split(':')
        .map(|t| {
            t.trim()
                .parse::<f64>()
                .map_err(|_| format!("bad number {t:?}"))
        })
        .collect::<Result<_, _>>()?;
    let [start, stop, step] = parts[..] else {
        return Err("expected start:stop:step".into());
    };
    if step.is_nan() || step <= 0.0 || stop < start {
        return Err("need step > 0 and start <= stop".into());
    }
    let count = ((stop - start) / step + 1e-9).floor() as usize;
    Ok(Grid(
        (0..=count)
            .map(|i| ((start + i as f64 * step) * 1e12).round() / 1e12)
            .collect(),
    ))
}

fn read_words(arg: &WordArgs) -> Result<String, CliError> {
    match arg.word.as_deref() {
        None | Some("-") => {
            let mut text = String::new();
            io::stdin().read_to_string(&mut text)?;
            Ok(text)
        }
        Some(s) if Path::new(s).is_file() => Ok(fs::read_to_string(s)?),
        Some(s) => Ok(s.to_string()),
    }
}

fn params(code: &CodeArgs) -> Result<Code, CliError> {
    Ok(Code::new(&CodeParams::new(&code.q, code.h)?)?)
}

fn run(cli: Cli, out: &mut impl Write) -> Result<(), CliError> {
    match cli.command {
        Command::Encode { code, m, out: fmt } => {
            let c = params(&code)?;
            let f = c.message_function(m)?;
            let w = c.codeword(&f);
            match fmt {
                Out::Csv => writeln!(out, "{w}")?,
                Out::Json => writeln!(
                    out,
                    "{}",
                    json!({"m": m, "f": f.to_string(), "word": w.to_string()})
                )?,
            }
        }
        Command::Decode {
            code,
            e,
            word,
            out: fmt,
        } => {
            let c = params(&code)?;
            let e = e.unwrap_or(c.params().correction_radius());
            for line in read_words(&word)?.lines().filter(|l| !l.trim().is_empty()) {
                let w = Codeword::parse(line, c.params())?;
                let f = c.decode(&w, e)?;
                let m = c.iota(&f)?;
                let errors = hamming_distance(&c.codeword(&f), &w)?;
                match fmt {
                    Out::Csv => writeln!(out, "f = {f}\nm = {m}")?,
                    Out::Json => writeln!(
                        out,
                        "{}",
                        json!({"f": f.to_string(), "m": m, "errors": errors})
                    )?,
                }
            }
        }
        Command::Recognize {
            code,
            word,
            out: fmt,
        } => {
            let c = params(&code)?;
            for line in read_words(&word)?.lines().filter(|l| !l.trim().is_empty()) {
                let w = Codeword::parse(line, c.params())?;
                let f = c
                    .recognize(&w)
                    .ok_or_else(|| CliError::NotACodeword(w.to_string()))?;
                let m = c.iota(&f)?;
                match fmt {
                    Out::Csv => writeln!(out, "f = {f}\nm = {m}")?,
                    Out::Json => writeln!(out, "{}", json!({"f": f.to_string(), "m": m}))?,
                }
            }
        }
        Command::Enumerate { code, out: fmt } => {
            let c = params(&code)?;
            if fmt == Out::Csv {
                writeln!(out, "m,f,word")?;
            }
            for (m, w) in c.enumerate() {
                let f = c.message_function(m)?;
                match fmt {
                    Out::Csv => writeln!(out, "{m},{f},{w}")?,
                    Out::Json => writeln!(
                        out,
                        "{}",
                        json!({"m": m, "f": f.to_string(), "word": w.to_string()})
                    )?,
                }
            }
        }
        Command::Verify { code, out: fmt } => verify(&params(&code)?, fmt, out)?,
        Command::Zeta {
            l_poly,
            nmax,
            out: fmt,
        } => {
            let text = if Path::new(&l_poly).is_file() {
                fs::read_to_string(&l_poly)?
            } else {
                l_poly
            };
            let l = LPolynomial::from_json(&text)?;
            let deviation = l.riemann_hypothesis_deviation();
            if deviation > 1e-9 {
                eprintln!("warning: roots of L are off |z| = q^(-1/2) by up to {deviation:.3e}");
            }
            let tables = CountTables::new(&l, nmax);
            match fmt {
                Out::Csv => {
                    writeln!(out, "n,M_n,A_h")?;
                    for (n, (m, a)) in tables.m.iter().zip(&tables.a).enumerate() {
                        writeln!(out, "{n},{m},{a}")?;
                    }
                }
                Out::Json => {
                    let j = zeta::jacobian_size(&l)?;
                    let list = |v: &[BigInt]| v.iter().map(big_json).collect::<Vec<_>>();
                    writeln!(
                        out,
                        "{}",
                        json!({
                            "q": l.q(),
                            "genus": l.genus(),
                            "jacobian": big_json(&j),
                            "M_n": list(&tables.m),
                            "A_h": list(&tables.a),
                        })
                    )?;
                }
            }
        }
        Command::Thresholds {
            q,
            all_table,
            out: fmt,
        } => {
            let qs: Vec<u64> = if all_table {
                TABLE_Q.to_vec()
            } else {
                q.into_iter().collect()
            };
            let rows = qs
                .iter()
                .map(|&q| Ok((q, zeta::rho1(q)?)))
                .collect::<Result<Vec<_>, ZetaError>>()?;
            match fmt {
                Out::Csv => {
                    writeln!(out, "q,rho1")?;
                    for (q, r) in &rows {
                        writeln!(out, "{q},{:.4}", r.value)?;
                    }
                }
                Out::Json => {
                    let rows: Vec<Value> = rows
                        .iter()
                        .map(|(q, r)| {
                            json!({
                                "q": q,
                                "rho1": r.value,
                                "rho0": zeta::rho0(*q),
                                "minimizer_r": r.minimizer_r,
                                "tol": r.tol,
                            })
                        })
                        .collect();
                    writeln!(out, "{}", Value::Array(rows))?;
                }
            }
        }
        Command::Rates {
            q,
            delta_grid,
            out: fmt,
        } => {
            let b = RateBounds::new(q, &delta_grid.0)?;
            match fmt {
                Out::Csv => {
                    writeln!(out, "delta,goppa,goppa_q1,new_rate,gv")?;
                    for r in &b.rows {
                        writeln!(
                            out,
                            "{},{},{},{},{}",
                            sig6(r.delta),
                            sig6(r.goppa),
                            sig6(r.goppa_q1),
                            sig6(r.new_rate),
                            sig6(r.gv)
                        )?;
                    }
                }
                Out::Json => {
                    let rows: Vec<Value> = b
                        .rows
                        .iter()
                        .map(|r| {
                            json!({
                                "delta": r.delta,
                                "goppa": r.goppa,
                                "goppa_q1": r.goppa_q1,
                                "new_rate": r.new_rate,
                                "gv": r.gv,
                            })
                        })
                        .collect();
                    writeln!(
                        out,
                        "{}",
                        json!({
                            "q": b.q,
                            "q0": b.q0,
                            "goppa_rhs": b.goppa_rhs,
                            "extrapolated_rhs": b.extrapolated_rhs,
                            "new_lhs_slope": b.new_lhs_slope,
                            "new_rhs_gain": b.new_rhs_gain,
                            "crossover_1mR": b.crossover_1m_r,
                            "dv_ratio": b.dv_ratio,
                            "rows": rows,
                        })
                    )?;
                }
            }
        }
        Command::Degrade {
            code,
            seed,
            forbidden,
            out: fmt,
        } => {
            let c = params(&code)?;
            let forbidden: Vec<ProjectiveValue> = match forbidden {
                Some(text) => Codeword::parse(&text, c.params())?.symbols().to_vec(),
                None => sample_forbidden(c.params(), &mut ChaCha8Rng::seed_from_u64(seed)),
            };
            let survivors = c.degrade(&forbidden)?;
            let words: Vec<Codeword> = survivors.iter().map(|(_, w)| w.clone()).collect();
            debug_assert_eq!(count_survivors(&words, &forbidden), words.len());
            let size = BigInt::from(c.messages().size());
            let expect = zeta::degradation_expectation(c.params().q(), c.params().n(), &size);
            let forbidden = Codeword::new(forbidden).to_string();
            match fmt {
                Out::Csv => {
                    writeln!(out, "forbidden,survivors,expected,expected_approx")?;
                    writeln!(
                        out,
                        "{forbidden},{},{},{}",
                        survivors.len(),
                        expect.exact,
                        sig6(expect.approx)
                    )?;
                }
                Out::Json => {
                    let list: Vec<Value> = survivors
                        .iter()
                        .map(|(m, w)| json!({"m": m, "word": w.to_string()}))
                        .collect();
                    writeln!(
                        out,
                        "{}",
                        json!({
                            "forbidden": forbidden,
                            "survivors": list,
                            "expected": expect.exact.to_string(),
                            "expected_approx": expect.approx,
                        })
                    )?;
                }
            }
        }
    }
    Ok(())
}

fn verify(c: &Code, fmt: Out, out: &mut impl Write) -> Result<(), CliError> {
    let p = c.params();
    let expected = c.messages().size();
    let brute = brute_force_code(p)?;
    let words: Vec<Codeword> = c.enumerate().map(|(_, w)| w).collect();
    let distinct: HashSet<&Codeword> = words.iter().collect();
    let mut min_distance = p.n();
    for i in 0..words.len() {
        for j in i + 1..words.len() {
            min_distance = min_distance.min(hamming_distance(&words[i], &words[j])?);
        }
    }
    let mut round_trip = true;
    for (m, w) in c.enumerate() {
        let f = c.message_function(m)?;
        round_trip &=
            c.iota(&f)? == m && c.recognize(&w).as_ref() == Some(&f) && brute.contains(&f);
    }
    let ok = brute.len() as u64 == expected
        && distinct.len() as u64 == expected
        && min_distance >= p.designed_distance()
        && round_trip;
    match fmt {
        Out::Csv => {
            writeln!(out, "params: {p}")?;
            writeln!(out, "size: {} = expected {expected}", brute.len())?;
            writeln!(out, "distinct codewords: {}", distinct.len())?;
            writeln!(
                out,
                "min distance: {min_distance} >= designed {}",
                p.designed_distance()
            )?;
            writeln!(
                out,
                "round trip: {}",
                if round_trip { "OK" } else { "FAILED" }
            )?;
        }
        Out::Json => writeln!(
            out,
            "{}",
            json!({
                "params": p.to_string(),
                "size": brute.len(),
                "expected": expected,
                "distinct": distinct.len(),
                "min_distance": min_distance,
                "designed_distance": p.designed_distance(),
                "round_trip": round_trip,
            })
        )?,
    }
    if !ok {
        return Err(CliError::Verify(format!(
            "{p} does not match the brute-force oracle"
        )));
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let result = run(cli, &mut out);
    let flushed = out.flush();
    match result.and(flushed.map_err(CliError::from)) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

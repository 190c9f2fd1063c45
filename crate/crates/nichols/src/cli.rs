//! Command-line interface.
//!
//! Exit codes: 0 on success, 1 when `verify-identities` finds a failing
//! check, 2 on input errors (unreadable file, parse diagnostic, invalid
//! caps, disconnected diagram for `analyze`).

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use nichols_core::nichols::{decide_finiteness, pbw_series, Caps, GroupoidStats, NicholsAlgebra};
use nichols_core::weyl::{generate_groupoid, reflect, verdict_of, GroupoidState};
use nichols_core::{ArithmeticVerdict, BracketKind, Error, LatticeVector, Order};

use crate::parser::{parse_instance, InstanceSpec};
use crate::report::{self, Doc, Field, Format};
use crate::suites::{verify_instance, DEFAULT_SEED};

#[derive(Parser, Debug)]
#[command(name = "nichols", version, about = "Finiteness and root systems of Nichols algebras of diagonal type")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Full pipeline: groupoid, roots, heights, Hilbert series, verdicts and Lie evidence.
    Analyze(Common),
    /// Hard super-letters with their heights.
    Roots(Common),
    /// Weyl groupoid closure and the arithmetic root system verdict.
    Groupoid(Common),
    /// Graded dimensions through the degree cap.
    Hilbert(Common),
    /// Truncated graded dimensions of the braided and the ordinary Lie algebra generated by V.
    Lie(Common),
    /// Braided Jacobi identity, product rule and iterated-bracket formulas on this instance.
    VerifyIdentities(Common),
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// Instance file.
    pub input: PathBuf,
    /// Largest total degree computed.
    #[arg(long, default_value_t = 8, value_parser = clap::value_parser!(u64).range(1..=64))]
    pub max_degree: u64,
    /// Largest number of groupoid states explored.
    #[arg(long, default_value_t = 10_000, value_parser = clap::value_parser!(u64).range(1..))]
    pub cap_states: u64,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Seed for the randomized triples of `verify-identities`.
    #[arg(long, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Number of random triples for `verify-identities`.
    #[arg(long, default_value_t = 200)]
    pub triples: usize,
}

impl Command {
    pub fn common(&self) -> &Common {
        match self {
            Command::Analyze(c)
            | Command::Roots(c)
            | Command::Groupoid(c)
            | Command::Hilbert(c)
            | Command::Lie(c)
            | Command::VerifyIdentities(c) => c,
        }
    }
}

/// What the process prints and returns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: u8,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn input_error(msg: String) -> Self {
        Outcome {
            code: 2,
            stdout: String::new(),
            stderr: format!("error: {}\n", msg),
        }
    }
}

pub fn run(cli: &Cli) -> Outcome {
    let c = cli.command.common();
    let text = match std::fs::read_to_string(&c.input) {
        Ok(t) => t,
        Err(e) => return Outcome::input_error(format!("{}: {}", c.input.display(), e)),
    };
    let spec = match parse_instance(&text) {
        Ok(s) => s,
        Err(d) => return Outcome::input_error(format!("{}:{}", c.input.display(), d)),
    };
    match execute(&cli.command, &spec) {
        Ok((doc, ok)) => Outcome {
            code: if ok { 0 } else { 1 },
            stdout: doc.render(c.format),
            stderr: String::new(),
        },
        Err(e) => Outcome::input_error(e.to_string()),
    }
}

/// Runs one subcommand; the flag is false when a verification failed.
pub fn execute(cmd: &Command, spec: &InstanceSpec) -> Result<(Doc, bool), Error> {
    let c = cmd.common();
    let d = c.max_degree as usize;
    let caps = Caps {
        max_degree: d,
        cap_states: c.cap_states as usize,
    };
    let b = spec.bicharacter();
    let mut doc = report::header(spec, d, caps.cap_states);
    match cmd {
        Command::Analyze(_) => {
            let r = decide_finiteness(&b, caps)?;
            return Ok((report::analysis(spec, &r), true));
        }
        Command::Roots(_) => {
            let mut alg = NicholsAlgebra::new(&b);
            let roots = alg.hard_super_letters(d)?;
            let roots = alg.check_heights(&roots, d)?;
            let (trivial, m_inf) = nichols_core::nichols::height_violations(&roots);
            doc.push("roots", Field::Vectors(roots.iter().map(|r| r.root.clone()).collect()))
                .push("root_data", report::root_records(&roots))
                .push("trivial_self_braiding", Field::Strs(trivial.iter().map(|w| w.to_string()).collect()))
                .push("m_infinity", Field::Strs(m_inf.iter().map(|w| w.to_string()).collect()));
        }
        Command::Groupoid(_) => {
            let g = generate_groupoid(&b, &GroupoidState::standard(spec.rank), caps.cap_states)?;
            let stats: GroupoidStats = report::stats_of(&g);
            doc.extend(report::groupoid_stats(&stats));
            let verdict = verdict_of(&g);
            doc.push("arithmetic_root_system", Field::Str(report::arithmetic_text(&verdict).to_string()));
            let rs = g.root_set();
            doc.push("root_count", Field::Int(rs.roots.len() as u64))
                .push("positive_roots", Field::Vectors(rs.positive_sorted()));
            let mut involution = true;
            for s in &g.states {
                for k in 0..spec.rank {
                    if let Ok(Some(t)) = reflect(&b, s, k) {
                        if let Ok(back) = reflect(&b, &t, k) {
                            involution &= back.as_ref() == Some(s);
                        }
                    }
                }
            }
            doc.push("reflections_are_involutions", Field::Bool(involution));
            if let ArithmeticVerdict::Yes(rs) = &verdict {
                let mut prod: Option<u64> = Some(1);
                for a in &rs.positive {
                    prod = match (prod, b.chi(a, a)?.order()?) {
                        (Some(p), Order::Finite(k)) => p.checked_mul(k),
                        _ => None,
                    };
                }
                doc.push("groupoid_dim", report::optional_int(prod));
            }
        }
        Command::Hilbert(_) => {
            let mut alg = NicholsAlgebra::new(&b);
            let roots = alg.hard_super_letters(d)?;
            let roots = alg.check_heights(&roots, d)?;
            let h = alg.hilbert(d);
            let pbw = pbw_series(&roots, d);
            doc.extend(report::hilbert_doc(&h, pbw.as_ref()));
            let mut per: Vec<String> = Vec::new();
            for total in 1..=d {
                for mu in nichols_core::words::multidegrees_of_total(spec.rank, total) {
                    let dim = alg.dimension(&mu)?;
                    if dim > 0 {
                        per.push(format!("{}: {}", LatticeVector::to_string(&mu), dim));
                    }
                }
            }
            doc.push("multidegree_dims", Field::Strs(per));
        }
        Command::Lie(_) => {
            let mut alg = NicholsAlgebra::new(&b);
            let lie = nichols_core::lie::lie_dims(&mut alg, BracketKind::Braided, d)?;
            let minus = nichols_core::lie::lie_dims(&mut alg, BracketKind::Minus, d)?;
            let witness = if spec.rank >= 2 { nichols_core::lie::infinite_witness(&b)? } else { None };
            doc.push("witness", report::witness_field(&witness))
                .push("lie_dims", report::degrees(&lie))
                .push("lie_total", Field::Int(lie.total() as u64))
                .push("lie_minus_dims", report::degrees(&minus))
                .push("lie_minus_total", Field::Int(minus.total() as u64));
        }
        Command::VerifyIdentities(_) => {
            let s = verify_instance(&b, c.seed, c.triples)?;
            doc.push("seed", Field::Int(c.seed))
                .push("triples", Field::Int(c.triples as u64));
            doc.extend(s.to_doc());
            let ok = s.passed();
            return Ok((doc, ok));
        }
    }
    Ok((doc, true))
}

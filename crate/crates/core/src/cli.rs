//! The `cloops` command line.
//!
//! [`run`] takes the full argument vector and returns the exit status and the
//! text to print, so tests drive it without spawning a process. Domain errors
//! exit with 1 and print `ERROR <kind>: <detail>` as the first line; usage
//! errors exit with 2.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

use crate::autotopism::{construct_in_c_loop, enumerate_autotopisms, Constructed};
use crate::error::{Error, Result};
use crate::fixtures;
use crate::identities::{all_reports, is_c, IdentityName};
use crate::magma::{as_loop, read_table_file, write_table_file, LoopStructure};
use crate::parastrophe::{equivalence_report, parastrophe, ParastropheKind};
use crate::perm::Perm;
use crate::sts::{build_cs_family, cardinality_check, parse_bases, verify_sts};

#[derive(Debug, Parser)]
#[command(name = "cloops", about = "Autotopisms, parastrophes and triple systems of finite C-loops")]
pub struct Command {
    #[command(subcommand)]
    pub action: Action,
}

#[derive(Debug, Subcommand)]
pub enum Action {
    /// Check loop identities, all of them unless one is named.
    Check {
        #[arg(long)]
        table: PathBuf,
        /// One of lc, rc, c, left-alt, right-alt, power-assoc, nuclear-square, steiner, associative.
        #[arg(long)]
        identity: Option<IdentityName>,
    },
    /// Construct the autotopism attached to an element of a C-loop.
    Autotopism {
        #[arg(long)]
        table: PathBuf,
        #[arg(long)]
        x: usize,
    },
    /// Print a parastrophe in .tbl format.
    Parastrophe {
        #[arg(long)]
        table: PathBuf,
        /// One of star, rdiv, ldiv, rdiv-star, ldiv-star.
        #[arg(long)]
        kind: ParastropheKind,
    },
    /// Relate the constructed autotopism components to parastrophe equalities.
    EquivReport {
        #[arg(long)]
        table: PathBuf,
    },
    /// Build the CS-autotopism triple family and check the Steiner triple system axioms.
    Sts {
        #[arg(long)]
        table: PathBuf,
        /// Base autotopisms, one `U ; V ; W` per line in cycle notation.
        #[arg(long)]
        bases: Option<PathBuf>,
    },
    /// List every autotopism by brute force (order at most 8).
    Enumerate {
        #[arg(long)]
        table: PathBuf,
    },
    /// Replay the x = 4 construction on the built-in order-12 C-loop.
    Demo,
}

/// Runs one invocation. `argv[0]` is the program name.
pub fn run<I, T>(argv: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cmd = match Command::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            return (code, e.render().to_string());
        }
    };
    match execute(&cmd.action) {
        Ok(out) => (0, out),
        Err(e) => (1, format!("ERROR {}: {e}\n", e.kind())),
    }
}

fn load_text(path: &Path) -> Result<String> {
    std::fs::read_to_string(path)
        .map_err(|e| Error::Io { path: path.display().to_string(), message: e.to_string() })
}

fn load_loop(path: &Path) -> Result<LoopStructure> {
    as_loop(read_table_file(&load_text(path)?)?)
}

fn require_c(l: &LoopStructure) -> Result<()> {
    let c = is_c(l);
    if c.holds {
        Ok(())
    } else {
        Err(Error::IdentityFails(Box::new(c)))
    }
}

/// `R_k` if the permutation is a right translation, otherwise its cycles.
fn right_translation_name(l: &LoopStructure, p: &Perm) -> String {
    match l.right_translations().iter().position(|r| r == p) {
        Some(k) => format!("R{k}"),
        None => p.to_string(),
    }
}

fn describe_constructed(out: &mut String, l: &LoopStructure, c: &Constructed) {
    let _ = writeln!(out, "x = {}", c.x);
    let _ = writeln!(out, "x^2 = {}", c.square);
    let _ = writeln!(out, "trivial = {}", c.trivial);
    let _ = writeln!(out, "alpha1S2 = {}", c.alpha1_s2());
    let _ = writeln!(out, "beta1T2 = {}", c.beta1_t2());
    let _ = writeln!(out, "gamma1R2 = {}", c.gamma1_r2());
    let names: Vec<String> = c.forward.components().iter().map(|p| right_translation_name(l, p)).collect();
    let _ = writeln!(out, "forward = ({})", names.join(", "));
    let _ = writeln!(out, "inverse = {}", c.inverse);
    let _ = writeln!(out, "alpha2S1 = {}", c.inverse.u());
    let _ = writeln!(out, "beta2T1 = {}", c.beta2_t1());
    let _ = writeln!(out, "gamma2R1 = {}", c.inverse.w());
}

fn execute(action: &Action) -> Result<String> {
    let mut out = String::new();
    match action {
        Action::Check { table, identity } => {
            let l = load_loop(table)?;
            let reports = match identity {
                Some(name) => vec![name.check(&l)],
                None => all_reports(&l),
            };
            let _ = writeln!(out, "order = {}", l.order());
            let _ = writeln!(out, "identity element = {}", l.identity());
            for r in reports {
                let _ = writeln!(out, "{r}");
            }
        }
        Action::Autotopism { table, x } => {
            let l = load_loop(table)?;
            require_c(&l)?;
            let c = construct_in_c_loop(&l, *x)?;
            describe_constructed(&mut out, &l, &c);
        }
        Action::Parastrophe { table, kind } => {
            let q = read_table_file(&load_text(table)?)?;
            out = write_table_file(&parastrophe(&q, *kind));
        }
        Action::EquivReport { table } => {
            let l = load_loop(table)?;
            out = equivalence_report(&l)?.to_text();
            let _ = writeln!(out, "steiner = {}", crate::identities::is_steiner(&l).holds);
        }
        Action::Sts { table, bases } => {
            let l = load_loop(table)?;
            let bases = match bases {
                Some(p) => parse_bases(&load_text(p)?, &l)?,
                None => Vec::new(),
            };
            let fam = build_cs_family(&l, &bases)?;
            out.push_str(&fam.to_text());
            let _ = writeln!(out, "{}", verify_sts(&fam.system));
            let c = cardinality_check(&fam.system);
            let _ = writeln!(out, "cardinality = {} mod6 = {} admissible = {}", c.triples, c.residue, c.admissible);
        }
        Action::Enumerate { table } => {
            let l = load_loop(table)?;
            let all = enumerate_autotopisms(&l)?;
            let _ = writeln!(out, "count = {}", all.len());
            for a in all {
                let _ = writeln!(out, "{a}");
            }
        }
        Action::Demo => out = demo()?,
    }
    Ok(out)
}

/// The x = 4 construction on the built-in order-12 C-loop.
pub fn demo() -> Result<String> {
    let l = fixtures::table1_loop();
    let mut out = String::new();
    let _ = writeln!(out, "loop: built-in non-associative C-loop of order 12, identity {}", l.identity());
    let c = crate::autotopism::constructed_autotopism(&l, 4)?;
    describe_constructed(&mut out, &l, &c);
    let alpha = l.right_translation(10)?;
    let _ = writeln!(out, "alpha = R10 = {alpha}");
    let _ = writeln!(out, "alpha^2 = {}", alpha.pow(2));
    let _ = writeln!(out, "alpha^-2 = {}", alpha.pow(-2));
    let [u, v, w] = c.forward.components();
    if *u == alpha.pow(2) && *v == alpha.pow(-2) && w.is_identity() {
        let _ = writeln!(out, "(alpha1S2, beta1T2, gamma1R2) = (alpha^2, alpha^-2, I) = (R1, R2, R0)");
    }
    let verified = crate::autotopism::verify(&l, u.clone(), v.clone(), w.clone()).is_ok();
    let _ = writeln!(out, "verified = {verified}");
    Ok(out)
}

//! Command-line front end.
//!
//! Five subcommands over the JSON document formats of [`crate::document`]:
//! `charpoly`, `verify-ch`, `decompose`, `check`, `reconstruct`. Results go
//! to stdout, diagnostics to stderr, and the exit code is the contract:
//!
//! - `0` — success,
//! - `1` — domain violation or failed verdict (non-bistochastic input, bad
//!   decomposition weights, a failed identity check),
//! - `2` — malformed input (unreadable file, invalid JSON, bad rational
//!   strings, dimension problems).

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

use crate::birkhoff::{decompose, decompose_traced, BistochasticMatrix};
use crate::document::{
    CharPolyDocument, DecompositionDocument, DecompositionReadError, MatrixDocument,
};
use crate::matrix::{
    adjugate_identity_residual, cayley_hamilton_residual, char_poly, is_zero_matrix, MatrixRing,
    SquareMatrix,
};
use crate::poly::PolyRing;
use crate::rational::Rational;
use crate::ring::{Rationals, Ring};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_BAD_INPUT: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "ringmat",
    version,
    about = "Exact characteristic polynomials, Cayley-Hamilton verification, and Birkhoff decomposition of bistochastic matrices"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the characteristic polynomial det(xE - A) of a matrix.
    Charpoly { file: PathBuf },
    /// Verify that the characteristic polynomial annihilates the matrix and
    /// that (xE-A)* (xE-A) = E f(x); prints OK on success.
    #[command(name = "verify-ch")]
    VerifyCh { file: PathBuf },
    /// Decompose a bistochastic matrix into an exact convex combination of
    /// permutation matrices.
    Decompose {
        file: PathBuf,
        /// Also emit each extraction step: its permutation, absolute weight,
        /// intermediate residual, and the alternating cycles used.
        #[arg(long)]
        emit_steps: bool,
    },
    /// Check whether a matrix is bistochastic.
    Check { file: PathBuf },
    /// Rebuild the matrix a decomposition document describes.
    Reconstruct { file: PathBuf },
}

/// Runs a parsed invocation, writing results to `out` and diagnostics to
/// `err`; returns the exit code.
pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let code = match cli.command {
        Command::Charpoly { file } => cmd_charpoly(&file, out, err),
        Command::VerifyCh { file } => cmd_verify_ch(&file, out, err),
        Command::Decompose { file, emit_steps } => cmd_decompose(&file, emit_steps, out, err),
        Command::Check { file } => cmd_check(&file, out, err),
        Command::Reconstruct { file } => cmd_reconstruct(&file, out, err),
    };
    match code {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_BAD_INPUT
        }
    }
}

/// Anything that is the caller's input being malformed: mapped to exit 2.
type InputError = Box<dyn std::error::Error>;

fn read_matrix(path: &Path) -> Result<SquareMatrix<Rational>, InputError> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    Ok(MatrixDocument::parse_str(&text)?.to_matrix()?)
}

fn cmd_charpoly(path: &Path, out: &mut dyn Write, _err: &mut dyn Write) -> Result<i32, InputError> {
    let m = read_matrix(path)?;
    let cp = char_poly(&Rationals, &m)?;
    let qx = PolyRing::new(Rationals);
    let coefficients = cp
        .poly()
        .coeffs()
        .iter()
        .rev()
        .map(Rational::to_string)
        .collect();
    let doc = CharPolyDocument {
        n: m.order(),
        text: qx.elem_string(cp.poly()),
        coefficients,
    };
    write!(out, "{}", doc.to_json_string())?;
    Ok(EXIT_OK)
}

fn cmd_verify_ch(path: &Path, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, InputError> {
    let m = read_matrix(path)?;
    let ch_residual = cayley_hamilton_residual(&Rationals, &m)?;
    let adj_residual = adjugate_identity_residual(&Rationals, &m)?;
    let qx = PolyRing::new(Rationals);
    let mut ok = true;
    if !is_zero_matrix(&Rationals, &ch_residual) {
        ok = false;
        writeln!(err, "f(A) is not zero; residual: {ch_residual}")?;
    }
    if !is_zero_matrix(&qx, &adj_residual) {
        ok = false;
        let ring = MatrixRing::new(qx.clone(), m.order());
        writeln!(
            err,
            "(xE-A)*(xE-A) - Ef(x) is not zero; residual: {}",
            ring.elem_string(&adj_residual)
        )?;
    }
    if ok {
        writeln!(out, "OK")?;
        Ok(EXIT_OK)
    } else {
        Ok(EXIT_VIOLATION)
    }
}

fn cmd_decompose(
    path: &Path,
    emit_steps: bool,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32, InputError> {
    let m = read_matrix(path)?;
    let bist = match BistochasticMatrix::new(m) {
        Ok(b) => b,
        Err(violation) => {
            writeln!(err, "{violation}")?;
            return Ok(EXIT_VIOLATION);
        }
    };
    let doc = if emit_steps {
        let (d, steps) = decompose_traced(&bist);
        DecompositionDocument::from_decomposition(&d).with_steps(&steps)
    } else {
        DecompositionDocument::from_decomposition(&decompose(&bist))
    };
    write!(out, "{}", doc.to_json_string())?;
    Ok(EXIT_OK)
}

fn cmd_check(path: &Path, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, InputError> {
    let m = read_matrix(path)?;
    match BistochasticMatrix::new(m) {
        Ok(_) => {
            writeln!(out, "bistochastic")?;
            Ok(EXIT_OK)
        }
        Err(violation) => {
            writeln!(err, "{violation}")?;
            Ok(EXIT_VIOLATION)
        }
    }
}

fn cmd_reconstruct(
    path: &Path,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32, InputError> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let doc = DecompositionDocument::parse_str(&text)?;
    let decomposition = match doc.to_decomposition() {
        Ok(d) => d,
        Err(DecompositionReadError::Malformed(e)) => return Err(e.into()),
        Err(e) => {
            writeln!(err, "{e}")?;
            return Ok(EXIT_VIOLATION);
        }
    };
    let m = decomposition.reconstruct();
    write!(out, "{}", MatrixDocument::from_matrix(&m).to_json_string())?;
    Ok(EXIT_OK)
}

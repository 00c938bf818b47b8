use std::io::Write;
use std::process::ExitCode;

use canal_core::matrec::{implicitize_canal, SquaredMAT, VerifyMode};
use canal_core::parse::{parse_rational_function, parse_surface_expression, ParseError};
use canal_core::pipeline::{mat2_json, mpoly_json, run_pipeline, Config};
use canal_core::qpoly::{MPoly, Rat};
use clap::{Parser, Subcommand, ValueEnum};

const INPUT_ERROR: u8 = 64;

#[derive(Parser)]
#[command(name = "canalrec", version, about = "Recognize rational canal surfaces from implicit equations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether f(x,y,z) = 0 is a rational canal surface and recover its squared MAT.
    Recognize {
        /// Polynomial in x, y, z, or @path to read it from a file.
        input: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 5)]
        plane_retries: u32,
        #[arg(long, default_value_t = 3)]
        point_retries: u32,
        #[arg(long, default_value_t = 20)]
        height_bound: u64,
        #[arg(long, value_enum, default_value_t = Verify::Sampling)]
        verify: Verify,
        #[arg(long)]
        assume_not_rotational: bool,
        /// Plane a*x + b*y + c*z + d given as "a,b,c,d".
        #[arg(long, allow_hyphen_values = true)]
        plane: Option<String>,
        /// Base point "x,y,z" on the surface.
        #[arg(long, allow_hyphen_values = true)]
        point: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Implicitize the canal surface of a squared MAT.
    Forge {
        /// Spine "s1(t),s2(t),s3(t)".
        #[arg(long, allow_hyphen_values = true)]
        spine: String,
        /// Squared radius R(t).
        #[arg(long = "R", allow_hyphen_values = true)]
        r: String,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Verify {
    Sampling,
    Full,
}

fn fail(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(INPUT_ERROR)
}

fn parse_error(what: &str, text: &str, e: &ParseError) -> String {
    format!("{what}: {e}\n  {text}\n  {}^", " ".repeat(e.offset))
}

fn rational_list<const N: usize>(what: &str, text: &str) -> Result<[Rat; N], String> {
    let parts: Vec<&str> = text.split(',').collect();
    if parts.len() != N {
        return Err(format!("{what}: expected {N} comma-separated numbers"));
    }
    let mut out = Vec::with_capacity(N);
    for p in parts {
        let v = parse_surface_expression(p).map_err(|e| parse_error(what, p, &e))?;
        if !v.is_constant() {
            return Err(format!("{what}: '{}' is not a number", p.trim()));
        }
        out.push(v.constant_term());
    }
    Ok(out.try_into().unwrap())
}

/// Writes to stdout, ignoring a closed pipe.
fn emit(text: &str) {
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
}

fn read_input(input: &str) -> Result<String, String> {
    match input.strip_prefix('@') {
        Some(path) => std::fs::read_to_string(path).map_err(|e| format!("cannot read {path}: {e}")),
        None => Ok(input.to_string()),
    }
}

#[allow(clippy::too_many_arguments)]
fn recognize(
    input: &str,
    seed: u64,
    plane_retries: u32,
    point_retries: u32,
    height_bound: u64,
    verify: Verify,
    assume_not_rotational: bool,
    plane: Option<&str>,
    point: Option<&str>,
    json: bool,
) -> ExitCode {
    let text = match read_input(input) {
        Ok(t) => t,
        Err(e) => return fail(e),
    };
    let f: MPoly<Rat> = match parse_surface_expression(&text) {
        Ok(f) => f,
        Err(e) => return fail(parse_error("surface", text.trim_end(), &e)),
    };
    let plane = match plane.map(|p| rational_list::<4>("--plane", p)).transpose() {
        Ok(p) => p,
        Err(e) => return fail(e),
    };
    let point = match point.map(|p| rational_list::<3>("--point", p)).transpose() {
        Ok(p) => p,
        Err(e) => return fail(e),
    };
    let cfg = Config {
        seed,
        plane_retries,
        point_retries,
        height_bound,
        verify_mode: match verify {
            Verify::Sampling => VerifyMode::Sampling,
            Verify::Full => VerifyMode::Full,
        },
        assume_not_rotational,
        plane,
        point,
    };
    let report = match run_pipeline(&f, &cfg) {
        Ok(r) => r,
        Err(e) => return fail(e),
    };
    if json {
        emit(&format!("{}\n", serde_json::to_string_pretty(&report.to_json()).unwrap()));
    } else {
        emit(&report.to_text());
    }
    ExitCode::from(report.verdict.exit_code() as u8)
}

fn forge(spine: &str, r: &str, json: bool) -> ExitCode {
    let parts: Vec<&str> = spine.split(',').collect();
    if parts.len() != 3 {
        return fail("--spine: expected three comma-separated rational functions of t");
    }
    let mut s = Vec::new();
    for p in parts {
        match parse_rational_function(p) {
            Ok(v) => s.push(v),
            Err(e) => return fail(parse_error("--spine", p, &e)),
        }
    }
    let r = match parse_rational_function(r) {
        Ok(v) => v,
        Err(e) => return fail(parse_error("--R", r, &e)),
    };
    let m = SquaredMAT { s: s.try_into().unwrap(), r };
    let f = match implicitize_canal(&m) {
        Ok(f) => f,
        Err(e) => return fail(e),
    };
    if json {
        let out = serde_json::json!({
            "mat2": mat2_json(&m),
            "polynomial": mpoly_json(&f),
            "text": f.to_string(),
        });
        emit(&format!("{}\n", serde_json::to_string_pretty(&out).unwrap()));
    } else {
        emit(&format!("{f}\n"));
    }
    ExitCode::SUCCESS
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(INPUT_ERROR) } else { ExitCode::SUCCESS };
        }
    };
    match cli.command {
        Command::Recognize {
            input,
            seed,
            plane_retries,
            point_retries,
            height_bound,
            verify,
            assume_not_rotational,
            plane,
            point,
            json,
        } => recognize(
            &input,
            seed,
            plane_retries,
            point_retries,
            height_bound,
            verify,
            assume_not_rotational,
            plane.as_deref(),
            point.as_deref(),
            json,
        ),
        Command::Forge { spine, r, json } => forge(&spine, &r, json),
    }
}

use std::io::{Read, Write};
use std::process::ExitCode;

use clap::{Parser, ValueEnum};

use inert_core::cli::{exit_code, reorder_document, run, spec_from_value, Command, Options};
use inert_core::Error;

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Cmd {
    Model,
    Attach,
    Inert,
    Fiber,
    Certify,
    Onerel,
    Aspherical,
}

impl From<Cmd> for Command {
    fn from(c: Cmd) -> Self {
        match c {
            Cmd::Model => Command::Model,
            Cmd::Attach => Command::Attach,
            Cmd::Inert => Command::Inert,
            Cmd::Fiber => Command::Fiber,
            Cmd::Certify => Command::Certify,
            Cmd::Onerel => Command::Onerel,
            Cmd::Aspherical => Command::Aspherical,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

/// Sullivan models and rational inertness of cell attachments, in exact
/// arithmetic up to degree and length caps.
///
/// Exit codes: 0 decided, 10 undecided at the caps, 20-27 bad input,
/// 30-33 a falsified identity.
#[derive(Debug, Parser)]
#[command(name = "inert", version)]
struct Args {
    command: Cmd,
    /// Space-spec document: a path, `-` for stdin, or inline JSON.
    spec: String,
    /// Degree cap N (overrides the document).
    #[arg(long)]
    max_degree: Option<u32>,
    /// Length cap L (overrides the document).
    #[arg(long)]
    max_length: Option<u32>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Run every cross-identity available for the input.
    #[arg(long)]
    certify: bool,
    /// Shuffle basis lists of the document with this seed before parsing.
    #[arg(long)]
    seed_order: Option<u64>,
}

fn load(src: &str) -> std::io::Result<String> {
    if src == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else if src.trim_start().starts_with('{') {
        Ok(src.to_string())
    } else {
        std::fs::read_to_string(src)
    }
}

fn main() -> ExitCode {
    let args = Args::parse();
    let doc = match load(&args.spec) {
        Ok(d) => d,
        Err(e) => {
            eprintln!("error: cannot read {}: {e}", args.spec);
            return ExitCode::from(21);
        }
    };
    let result = (|| {
        let mut v: serde_json::Value = serde_json::from_str(&doc).map_err(|e| Error::Schema {
            field: format!("line {}, column {}", e.line(), e.column()),
            message: e.to_string(),
        })?;
        if let Some(seed) = args.seed_order {
            v = reorder_document(&v, seed);
        }
        let mut spec = spec_from_value(&v)?;
        if let Some(n) = args.max_degree {
            spec.caps.max_degree = n;
        }
        if let Some(l) = args.max_length {
            spec.caps.max_length = Some(l);
        }
        let opts = Options { certify: args.certify, timing: matches!(args.format, Format::Text) };
        run(&spec, args.command.into(), &opts)
    })();
    let code = exit_code(&result);
    match &result {
        Ok(rep) => {
            let out = match args.format {
                Format::Text => rep.to_text(),
                Format::Json => rep.to_json() + "\n",
            };
            let _ = std::io::stdout().write_all(out.as_bytes());
        }
        Err(e) => eprintln!("error: {e}"),
    }
    ExitCode::from(code as u8)
}

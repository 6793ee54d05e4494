use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use ringstruct::document::Document;
use ringstruct::generate::{corpus, generate, Params};
use ringstruct::report::{build_report, render, Command, Format, ReportError};
use serde_json::{json, Value};

const EXTENSION: &str = "ring";

#[derive(Parser)]
#[command(name = "ringstruct", version, about = "Structure reports for algebras, finite rings and mixed rings")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Text,
    Json,
}

impl From<OutputFormat> for Format {
    fn from(f: OutputFormat) -> Self {
        match f {
            OutputFormat::Text => Format::Text,
            OutputFormat::Json => Format::Json,
        }
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Classification into annihilating part and per-label factors.
    Classify { file: PathBuf },
    /// Jacobson radical, nilpotency certificates and radical complement.
    Radical { file: PathBuf },
    /// Idempotents, Pierce corners, semisimple and reduced decompositions.
    Idempotents { file: PathBuf },
    /// Dorroh and definable unitizations.
    Unitize { file: PathBuf },
    /// Brute-force structure of a finite or mixed ring.
    Oracle { file: PathBuf },
    /// Write a family member as a document; `corpus` writes the whole corpus
    /// into the output directory.
    Generate {
        family: String,
        /// Parameters as key=value.
        params: Vec<String>,
        /// Output file (directory for `corpus`); stdout when absent.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Run every applicable report on each `.ring` file in a directory.
    CorpusRun { dir: PathBuf },
}

/// Exit status with the message to print on stderr.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn validation(message: impl Into<String>) -> Self {
        Failure { code: 1, message: message.into() }
    }
}

impl From<ReportError> for Failure {
    fn from(e: ReportError) -> Self {
        Failure { code: e.exit_code() as u8, message: e.to_string() }
    }
}

fn load(path: &Path) -> Result<Document, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::validation(format!("{}: {e}", path.display())))?;
    Document::parse(&text).map_err(|e| Failure::validation(format!("{}: {e}", path.display())))
}

fn write_out(output: Option<&Path>, text: &str) -> Result<(), Failure> {
    match output {
        Some(p) => fs::write(p, text).map_err(|e| Failure::validation(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn file_stem(name: &str) -> String {
    name.chars()
        .map(|c| if c.is_ascii_alphanumeric() || c == '-' || c == '_' { c } else { '_' })
        .collect()
}

fn generate_cmd(family: &str, params: &[String], output: Option<&Path>) -> Result<(), Failure> {
    if family == "corpus" {
        let dir = output.ok_or_else(|| Failure::validation("`generate corpus` needs -o <dir>"))?;
        fs::create_dir_all(dir).map_err(|e| Failure::validation(format!("{}: {e}", dir.display())))?;
        for (i, doc) in corpus().iter().enumerate() {
            let path = dir.join(format!("{:02}_{}.{EXTENSION}", i + 1, file_stem(doc.name())));
            write_out(Some(&path), &doc.to_text())?;
        }
        return Ok(());
    }
    let params = Params::parse(params).map_err(|e| Failure::validation(e.to_string()))?;
    let doc = generate(family, &params).map_err(|e| Failure::validation(e.to_string()))?;
    write_out(output, &doc.to_text())
}

struct Outcome {
    file: String,
    code: u8,
    value: Value,
}

fn run_one(path: &Path) -> Outcome {
    let file = path.file_name().map(|f| f.to_string_lossy().into_owned()).unwrap_or_default();
    let doc = match load(path) {
        Ok(d) => d,
        Err(f) => return Outcome { file: file.clone(), code: f.code, value: json!({ "file": file, "status": "invalid", "error": f.message }) },
    };
    let mut code = 0;
    let mut ran = Vec::new();
    let mut errors = Vec::new();
    for c in Command::ALL.into_iter().filter(|c| c.accepts(doc.kind())) {
        match build_report(&doc, c) {
            Ok(_) => ran.push(c.as_str()),
            Err(e) => {
                code = code.max(e.exit_code() as u8);
                errors.push(format!("{}: {e}", c.as_str()));
            }
        }
    }
    let status = if errors.is_empty() { "ok" } else { "failed" };
    let value = json!({
        "file": file,
        "name": doc.name(),
        "kind": doc.kind().as_str(),
        "status": status,
        "reports": ran,
        "errors": errors,
    });
    Outcome { file, code, value }
}

fn corpus_run(dir: &Path, format: Format) -> Result<u8, Failure> {
    let entries = fs::read_dir(dir).map_err(|e| Failure::validation(format!("{}: {e}", dir.display())))?;
    let mut files: Vec<PathBuf> = entries
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == EXTENSION))
        .collect();
    files.sort();
    let outcomes: Vec<Outcome> = std::thread::scope(|s| {
        let handles: Vec<_> = files.iter().map(|p| s.spawn(move || run_one(p))).collect();
        handles.into_iter().map(|h| h.join().expect("report thread")).collect()
    });
    let code = outcomes.iter().map(|o| o.code).max().unwrap_or(0);
    match format {
        Format::Json => {
            let all: Vec<Value> = outcomes.into_iter().map(|o| o.value).collect();
            println!("{}", serde_json::to_string_pretty(&all).expect("values serialize"));
        }
        Format::Text => {
            let passed = outcomes.iter().filter(|o| o.code == 0).count();
            for o in &outcomes {
                let v = &o.value;
                if o.code == 0 {
                    let reports: Vec<&str> = v["reports"].as_array().into_iter().flatten().filter_map(Value::as_str).collect();
                    println!("PASS {} ({}, {}): {}", o.file, v["kind"].as_str().unwrap_or(""), v["name"].as_str().unwrap_or(""), reports.join(" "));
                } else {
                    let detail = match v.get("error") {
                        Some(e) => e.as_str().unwrap_or("").to_string(),
                        None => v["errors"].as_array().into_iter().flatten().filter_map(Value::as_str).collect::<Vec<_>>().join("; "),
                    };
                    println!("FAIL {}: {detail}", o.file);
                }
            }
            println!("{passed}/{} documents passed", outcomes.len());
        }
    }
    Ok(code)
}

fn run(cli: Cli) -> Result<u8, Failure> {
    let format = Format::from(cli.format);
    let (command, file) = match cli.command {
        Cmd::Classify { file } => (Command::Classify, file),
        Cmd::Radical { file } => (Command::Radical, file),
        Cmd::Idempotents { file } => (Command::Idempotents, file),
        Cmd::Unitize { file } => (Command::Unitize, file),
        Cmd::Oracle { file } => (Command::Oracle, file),
        Cmd::Generate { family, params, output } => {
            generate_cmd(&family, &params, output.as_deref())?;
            return Ok(0);
        }
        Cmd::CorpusRun { dir } => return corpus_run(&dir, format),
    };
    let doc = load(&file)?;
    let value = build_report(&doc, command)?;
    print!("{}", render(&value, format));
    Ok(0)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

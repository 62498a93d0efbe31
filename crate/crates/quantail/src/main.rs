use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use quantail::harness::{
    evaluate, load_dataset, majority_baseline, perturb_entailed, DataFormat, DatasetProfile,
    FieldMap, RunConfig,
};
use quantail::numset::{BinaryLabel, GoldLabel, SentencePair};
use quantail::reason::classify_pair;

#[derive(Parser)]
#[command(name = "quantail", about = "Symbolic quantitative entailment engine and evaluation harness")]
struct Cli {
    /// Path to a TOML config file (default: ./config/default.toml, or the
    /// QUANTAIL_CONFIG environment variable).
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a dataset and print/write a JSON report.
    Eval {
        /// Configured dataset name (rte-quant, newsnli, redditnli,
        /// stress-test, awpnli) or a path to a JSONL/TSV file.
        dataset: String,
        /// Write the JSON report here instead of stdout.
        #[arg(long)]
        report: Option<PathBuf>,
        /// Label arity when `dataset` is a raw path (2 or 3).
        #[arg(long, default_value_t = 2)]
        arity: u8,
        /// File format when `dataset` is a raw path.
        #[arg(long, value_enum, default_value = "jsonl")]
        format: CliFormat,
    },
    /// Classify one premise/hypothesis pair and show the evidence.
    Classify {
        #[arg(long)]
        premise: String,
        #[arg(long)]
        hypothesis: String,
        /// Label arity for reporting (2 collapses to entails/not-entails).
        #[arg(long, default_value_t = 2)]
        arity: u8,
    },
    /// Perturb the entailed pairs of a dataset into contradictions.
    Perturb {
        dataset: String,
        #[arg(long, default_value_t = 17)]
        seed: u64,
        /// Write perturbed pairs as JSONL here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = 2)]
        arity: u8,
        #[arg(long, value_enum, default_value = "jsonl")]
        format: CliFormat,
    },
    /// Report the majority-class baseline for a dataset.
    Baseline {
        dataset: String,
        #[arg(long, default_value_t = 2)]
        arity: u8,
        #[arg(long, value_enum, default_value = "jsonl")]
        format: CliFormat,
    },
}

#[derive(Clone, Copy, clap::ValueEnum)]
enum CliFormat {
    Jsonl,
    Tsv,
}

impl From<CliFormat> for DataFormat {
    fn from(f: CliFormat) -> Self {
        match f {
            CliFormat::Jsonl => DataFormat::Jsonl,
            CliFormat::Tsv => DataFormat::Tsv,
        }
    }
}

struct ResolvedDataset {
    name: String,
    profile: DatasetProfile,
}

fn resolve_dataset(
    cfg: &RunConfig,
    dataset: &str,
    arity: u8,
    format: CliFormat,
) -> ResolvedDataset {
    if let Some(profile) = cfg.datasets.get(dataset) {
        return ResolvedDataset { name: dataset.to_string(), profile: profile.clone() };
    }
    let path = PathBuf::from(dataset);
    let name = path
        .file_stem()
        .map(|s| s.to_string_lossy().to_string())
        .unwrap_or_else(|| "dataset".to_string());
    ResolvedDataset {
        name,
        profile: DatasetProfile { path, format: format.into(), arity, fields: FieldMap::default() },
    }
}

fn load(resolved: &ResolvedDataset) -> anyhow::Result<(Vec<SentencePair>, usize)> {
    let p = &resolved.profile;
    let loaded = load_dataset(&p.path, p.format, p.arity, &p.fields, &resolved.name)?;
    for d in &loaded.diagnostics {
        eprintln!("warning: {}", d);
    }
    Ok((loaded.pairs, loaded.skipped))
}

fn run() -> anyhow::Result<()> {
    let cli = Cli::parse();
    let root = std::env::current_dir()?;
    let cfg = RunConfig::resolve(cli.config.as_deref(), &root)?;
    let lex = cfg.lexicons()?;
    let params = cfg.engine_params();

    match cli.command {
        Command::Eval { dataset, report, arity, format } => {
            let resolved = resolve_dataset(&cfg, &dataset, arity, format);
            let (pairs, skipped) = load(&resolved)?;
            let result = evaluate(&resolved.name, &pairs, skipped, &lex, &params);
            eprintln!(
                "{}: n={} accuracy={:.1}% majority={:.1}% delta={:+.1}",
                result.dataset,
                result.n,
                result.accuracy * 100.0,
                result.majority_accuracy * 100.0,
                result.delta * 100.0
            );
            match report {
                Some(path) => std::fs::write(&path, result.to_json())?,
                None => println!("{}", result.to_json()),
            }
        }
        Command::Classify { premise, hypothesis, arity } => {
            let gold = if arity == 3 {
                GoldLabel::ThreeWay(quantail::numset::EntailmentLabel::Neutral)
            } else {
                GoldLabel::Binary(BinaryLabel::NotEntails)
            };
            let pair = SentencePair {
                id: "cli".to_string(),
                premise,
                hypothesis,
                gold,
                dataset: "cli".to_string(),
                arity,
            };
            let c = classify_pair(&pair, &lex, &params);
            let shown = if arity == 2 {
                c.label.to_binary().to_string()
            } else {
                c.label.to_string()
            };
            println!("label: {}", shown);
            println!("premise quantities:");
            for ns in &c.premise_numsets {
                println!("  {}", ns);
            }
            println!("hypothesis quantities:");
            for ns in &c.hypothesis_numsets {
                println!("  {}", ns);
            }
            if !c.equations.is_empty() {
                println!("justifying equations:");
                for (h, eq) in &c.equations {
                    println!("  H{}: {}", h + 1, eq);
                }
            }
            for d in &c.diagnostics {
                eprintln!("note: {}", d);
            }
        }
        Command::Perturb { dataset, seed, out, arity, format } => {
            let resolved = resolve_dataset(&cfg, &dataset, arity, format);
            let (pairs, _) = load(&resolved)?;
            let result = perturb_entailed(&pairs, seed);
            eprintln!(
                "perturbed {} of {} pairs ({} entailed pairs had no shared quantity)",
                result.pairs.len(),
                pairs.len(),
                result.skipped
            );
            let mut buf = String::new();
            for p in &result.pairs {
                let line = serde_json::json!({
                    "id": p.id,
                    "sentence1": p.premise,
                    "sentence2": p.hypothesis,
                    "gold_label": p.gold.as_str(),
                });
                buf.push_str(&line.to_string());
                buf.push('\n');
            }
            match out {
                Some(path) => std::fs::write(&path, buf)?,
                None => print!("{}", buf),
            }
        }
        Command::Baseline { dataset, arity, format } => {
            let resolved = resolve_dataset(&cfg, &dataset, arity, format);
            let (pairs, skipped) = load(&resolved)?;
            let result = majority_baseline(&resolved.name, &pairs, skipped);
            eprintln!(
                "{}: majority '{}' accuracy={:.1}%",
                result.dataset,
                result.majority_label,
                result.majority_accuracy * 100.0
            );
            println!("{}", result.to_json());
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run() {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}

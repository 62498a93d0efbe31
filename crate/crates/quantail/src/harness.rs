//! Evaluation harness: dataset ingestion, batch scoring, majority baselines,
//! JSON reports, and the entailed-pair perturbation probe.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::lexicon::LexiconSet;
use crate::numset::{BinaryLabel, EntailmentLabel, GoldLabel, SentencePair};
use crate::reason::{classify_pair, EngineParams};
use crate::text::{is_digit_token, tokenize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DataFormat {
    Jsonl,
    Tsv,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FieldMap {
    #[serde(default = "default_premise_field")]
    pub premise: String,
    #[serde(default = "default_hypothesis_field")]
    pub hypothesis: String,
    #[serde(default = "default_gold_field")]
    pub gold: String,
    #[serde(default)]
    pub id: Option<String>,
}

fn default_premise_field() -> String {
    "sentence1".to_string()
}
fn default_hypothesis_field() -> String {
    "sentence2".to_string()
}
fn default_gold_field() -> String {
    "gold_label".to_string()
}

impl Default for FieldMap {
    fn default() -> Self {
        FieldMap {
            premise: default_premise_field(),
            hypothesis: default_hypothesis_field(),
            gold: default_gold_field(),
            id: None,
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct DatasetProfile {
    pub path: PathBuf,
    #[serde(default = "default_format")]
    pub format: DataFormat,
    pub arity: u8,
    #[serde(default)]
    pub fields: FieldMap,
}

fn default_format() -> DataFormat {
    DataFormat::Jsonl
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct EngineConfig {
    #[serde(default = "default_theta")]
    pub theta: f64,
    #[serde(default = "default_max_depth")]
    pub max_depth: usize,
    #[serde(default = "default_max_solutions")]
    pub max_solutions: usize,
    #[serde(default = "default_seed")]
    pub seed: u64,
}

fn default_theta() -> f64 {
    0.6
}
fn default_max_depth() -> usize {
    3
}
fn default_max_solutions() -> usize {
    50
}
fn default_seed() -> u64 {
    17
}

impl Default for EngineConfig {
    fn default() -> Self {
        EngineConfig {
            theta: default_theta(),
            max_depth: default_max_depth(),
            max_solutions: default_max_solutions(),
            seed: default_seed(),
        }
    }
}

/// Harness configuration: engine knobs, lexicon directory, dataset profiles.
#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct RunConfig {
    #[serde(default)]
    pub engine: EngineConfig,
    #[serde(default)]
    pub lexicon_dir: Option<PathBuf>,
    #[serde(default)]
    pub datasets: BTreeMap<String, DatasetProfile>,
}

impl RunConfig {
    pub fn load(path: &Path) -> anyhow::Result<Self> {
        let text = fs::read_to_string(path)?;
        Ok(toml::from_str(&text)?)
    }

    /// Config file from `QUANTAIL_CONFIG` (the only env override), an explicit
    /// path, or built-in defaults rooted at `root`.
    pub fn resolve(explicit: Option<&Path>, root: &Path) -> anyhow::Result<Self> {
        if let Some(p) = explicit {
            return Self::load(p);
        }
        if let Ok(p) = std::env::var("QUANTAIL_CONFIG") {
            return Self::load(Path::new(&p));
        }
        let default_path = root.join("config").join("default.toml");
        if default_path.exists() {
            return Self::load(&default_path);
        }
        Ok(Self::with_standard_profiles(root))
    }

    /// The five standard evaluation-set profiles under `<root>/data/`.
    pub fn with_standard_profiles(root: &Path) -> Self {
        let mut datasets = BTreeMap::new();
        let data = root.join("data");
        let profile = |file: &str, arity: u8| DatasetProfile {
            path: data.join(file),
            format: DataFormat::Jsonl,
            arity,
            fields: FieldMap::default(),
        };
        datasets.insert("rte-quant".to_string(), profile("rte_quant.jsonl", 2));
        datasets.insert("newsnli".to_string(), profile("newsnli.jsonl", 2));
        datasets.insert("redditnli".to_string(), profile("redditnli.jsonl", 3));
        datasets.insert("stress-test".to_string(), profile("stress_test.jsonl", 3));
        datasets.insert("awpnli".to_string(), profile("awpnli.jsonl", 2));
        RunConfig { engine: EngineConfig::default(), lexicon_dir: None, datasets }
    }

    pub fn engine_params(&self) -> EngineParams {
        EngineParams {
            theta: self.engine.theta,
            max_depth: self.engine.max_depth,
            max_solutions: self.engine.max_solutions,
        }
    }

    pub fn lexicons(&self) -> std::io::Result<LexiconSet> {
        match &self.lexicon_dir {
            Some(dir) => LexiconSet::load_dir(dir),
            None => Ok(LexiconSet::embedded()),
        }
    }
}

pub struct LoadResult {
    pub pairs: Vec<SentencePair>,
    pub skipped: usize,
    pub diagnostics: Vec<String>,
}

fn parse_gold(raw: &str, arity: u8) -> Option<GoldLabel> {
    let raw = raw.trim().to_lowercase();
    match arity {
        2 => match raw.as_str() {
            "entails" | "entailment" | "entailed" | "yes" | "e" => {
                Some(GoldLabel::Binary(BinaryLabel::Entails))
            }
            "not-entails" | "not_entails" | "non-entailment" | "no" | "contradiction"
            | "neutral" | "c" | "n" => Some(GoldLabel::Binary(BinaryLabel::NotEntails)),
            _ => None,
        },
        3 => match raw.as_str() {
            "entailment" | "entails" | "e" => {
                Some(GoldLabel::ThreeWay(EntailmentLabel::Entailment))
            }
            "contradiction" | "c" => Some(GoldLabel::ThreeWay(EntailmentLabel::Contradiction)),
            "neutral" | "n" => Some(GoldLabel::ThreeWay(EntailmentLabel::Neutral)),
            _ => None,
        },
        _ => None,
    }
}

/// Load a JSONL or TSV test set. Malformed records are skipped with a
/// diagnostic; the skip count lands in the report.
pub fn load_dataset(
    path: &Path,
    format: DataFormat,
    arity: u8,
    fields: &FieldMap,
    dataset: &str,
) -> anyhow::Result<LoadResult> {
    let text = fs::read_to_string(path)?;
    let mut pairs = Vec::new();
    let mut skipped = 0usize;
    let mut diagnostics = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let record = match format {
            DataFormat::Jsonl => parse_jsonl_line(line, fields),
            DataFormat::Tsv => parse_tsv_line(line),
        };
        match record {
            Some((premise, hypothesis, gold_raw, id)) => match parse_gold(&gold_raw, arity) {
                Some(gold) => {
                    let id = id.unwrap_or_else(|| format!("{}-{:05}", dataset, pairs.len()));
                    pairs.push(SentencePair {
                        id,
                        premise,
                        hypothesis,
                        gold,
                        dataset: dataset.to_string(),
                        arity,
                    });
                }
                None => {
                    skipped += 1;
                    diagnostics.push(format!("line {}: unknown gold label '{}'", lineno + 1, gold_raw));
                }
            },
            None => {
                skipped += 1;
                diagnostics.push(format!("line {}: malformed record", lineno + 1));
            }
        }
    }
    Ok(LoadResult { pairs, skipped, diagnostics })
}

fn parse_jsonl_line(line: &str, fields: &FieldMap) -> Option<(String, String, String, Option<String>)> {
    let v: serde_json::Value = serde_json::from_str(line).ok()?;
    let premise = v.get(&fields.premise)?.as_str()?.to_string();
    let hypothesis = v.get(&fields.hypothesis)?.as_str()?.to_string();
    let gold = v.get(&fields.gold)?.as_str()?.to_string();
    let id = fields
        .id
        .as_ref()
        .and_then(|f| v.get(f))
        .and_then(|x| x.as_str())
        .map(str::to_string)
        .or_else(|| v.get("id").and_then(|x| x.as_str()).map(str::to_string));
    Some((premise, hypothesis, gold, id))
}

fn parse_tsv_line(line: &str) -> Option<(String, String, String, Option<String>)> {
    let mut cols = line.split('\t');
    let premise = cols.next()?.to_string();
    let hypothesis = cols.next()?.to_string();
    let gold = cols.next()?.to_string();
    let id = cols.next().map(str::to_string);
    Some((premise, hypothesis, gold, id))
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct PairRecord {
    pub id: String,
    pub gold: String,
    pub predicted: String,
}

/// Versioned evaluation report; one JSON object, deterministic field order.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct EvalReport {
    pub version: u32,
    pub dataset: String,
    pub n: usize,
    pub skipped: usize,
    pub accuracy: f64,
    pub majority_accuracy: f64,
    pub delta: f64,
    pub majority_label: String,
    pub confusion: BTreeMap<String, BTreeMap<String, usize>>,
    pub per_pair: Vec<PairRecord>,
}

impl EvalReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

fn majority(pairs: &[SentencePair]) -> (String, usize) {
    let mut histogram: BTreeMap<String, usize> = BTreeMap::new();
    for p in pairs {
        *histogram.entry(p.gold.as_str().to_string()).or_insert(0) += 1;
    }
    histogram
        .into_iter()
        .max_by(|a, b| a.1.cmp(&b.1).then(b.0.cmp(&a.0)))
        .unwrap_or(("neutral".to_string(), 0))
}

fn assemble_report(
    dataset: &str,
    pairs: &[SentencePair],
    skipped: usize,
    predictions: Vec<String>,
) -> EvalReport {
    let n = pairs.len();
    let (majority_label, majority_count) = majority(pairs);
    let mut correct = 0usize;
    let mut confusion: BTreeMap<String, BTreeMap<String, usize>> = BTreeMap::new();
    let mut per_pair = Vec::with_capacity(n);
    for (pair, predicted) in pairs.iter().zip(&predictions) {
        let gold = pair.gold.as_str().to_string();
        if gold == *predicted {
            correct += 1;
        }
        *confusion.entry(gold.clone()).or_default().entry(predicted.clone()).or_insert(0) += 1;
        per_pair.push(PairRecord { id: pair.id.clone(), gold, predicted: predicted.clone() });
    }
    let accuracy = if n == 0 { 0.0 } else { correct as f64 / n as f64 };
    let majority_accuracy = if n == 0 { 0.0 } else { majority_count as f64 / n as f64 };
    EvalReport {
        version: 1,
        dataset: dataset.to_string(),
        n,
        skipped,
        accuracy,
        majority_accuracy,
        delta: accuracy - majority_accuracy,
        majority_label,
        confusion,
        per_pair,
    }
}

/// Classify every pair and assemble the report. The worker fan-out preserves
/// input order, so reports are deterministic.
pub fn evaluate(
    dataset: &str,
    pairs: &[SentencePair],
    skipped: usize,
    lex: &LexiconSet,
    params: &EngineParams,
) -> EvalReport {
    let predictions: Vec<String> = pairs
        .par_iter()
        .map(|pair| pair.gold.project(classify_pair(pair, lex, params).label))
        .collect();
    assemble_report(dataset, pairs, skipped, predictions)
}

/// Baseline that always predicts the majority gold label of the test set.
pub fn majority_baseline(dataset: &str, pairs: &[SentencePair], skipped: usize) -> EvalReport {
    let (label, _) = majority(pairs);
    let predictions = vec![label; pairs.len()];
    assemble_report(dataset, pairs, skipped, predictions)
}

pub struct PerturbResult {
    pub pairs: Vec<SentencePair>,
    /// Entailed pairs with no shared premise/hypothesis quantity.
    pub skipped: usize,
}

fn is_entailed(gold: &GoldLabel) -> bool {
    matches!(
        gold,
        GoldLabel::Binary(BinaryLabel::Entails) | GoldLabel::ThreeWay(EntailmentLabel::Entailment)
    )
}

/// Bump a numeric token: +/-1 for integers, +/-1 in the last decimal place
/// otherwise. Never goes negative.
fn bump_token(token: &str, up: bool) -> Option<String> {
    let plain: String = token.chars().filter(|c| *c != ',').collect();
    if let Some(dot) = plain.find('.') {
        let frac_digits = plain.len() - dot - 1;
        let scaled: i128 = plain.replace('.', "").parse().ok()?;
        let delta = 1i128;
        let mut next = if up { scaled + delta } else { scaled - delta };
        if next < 0 {
            next = scaled + delta;
        }
        let s = format!("{:0>width$}", next, width = frac_digits + 1);
        let split = s.len() - frac_digits;
        Some(format!("{}.{}", &s[..split], &s[split..]))
    } else {
        let v: i128 = plain.parse().ok()?;
        let mut next = if up { v + 1 } else { v - 1 };
        if next < 0 {
            next = v + 1;
        }
        Some(next.to_string())
    }
}

/// Replace the first hypothesis quantity that also appears (string-identical)
/// in the premise with a nearby different value, flipping gold to the
/// contradictory label. Seeded and deterministic.
pub fn perturb_entailed(pairs: &[SentencePair], seed: u64) -> PerturbResult {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    let mut skipped = 0usize;
    for pair in pairs.iter().filter(|p| is_entailed(&p.gold)) {
        let premise_tokens: std::collections::HashSet<String> = tokenize(&pair.premise)
            .into_iter()
            .filter(|t| is_digit_token(&t.text))
            .map(|t| t.text)
            .collect();
        let shared = tokenize(&pair.hypothesis)
            .into_iter()
            .find(|t| is_digit_token(&t.text) && premise_tokens.contains(&t.text));
        let Some(token) = shared else {
            skipped += 1;
            continue;
        };
        let up: bool = rng.gen_bool(0.5);
        let Some(replacement) = bump_token(&token.text, up) else {
            skipped += 1;
            continue;
        };
        let mut hypothesis = pair.hypothesis.clone();
        hypothesis.replace_range(token.start..token.end, &replacement);
        let gold = match pair.arity {
            2 => GoldLabel::Binary(BinaryLabel::NotEntails),
            _ => GoldLabel::ThreeWay(EntailmentLabel::Contradiction),
        };
        out.push(SentencePair {
            id: format!("{}-perturbed", pair.id),
            premise: pair.premise.clone(),
            hypothesis,
            gold,
            dataset: pair.dataset.clone(),
            arity: pair.arity,
        });
    }
    PerturbResult { pairs: out, skipped }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::Write;

    fn pair(premise: &str, hypothesis: &str, gold: GoldLabel, arity: u8, id: &str) -> SentencePair {
        SentencePair {
            id: id.to_string(),
            premise: premise.to_string(),
            hypothesis: hypothesis.to_string(),
            gold,
            dataset: "test".to_string(),
            arity,
        }
    }

    #[test]
    fn loads_jsonl() {
        let mut f = tempfile::NamedTempFile::new().unwrap();
        writeln!(f, r#"{{"sentence1": "a", "sentence2": "b", "gold_label": "entails"}}"#).unwrap();
        writeln!(f, r#"{{"sentence1": "c", "sentence2": "d", "gold_label": "bogus"}}"#).unwrap();
        writeln!(f, "not json").unwrap();
        let result = load_dataset(f.path(), DataFormat::Jsonl, 2, &FieldMap::default(), "t").unwrap();
        assert_eq!(result.pairs.len(), 1);
        assert_eq!(result.skipped, 2);
        assert!(result.pairs[0].arity_consistent());
    }

    #[test]
    fn loads_tsv_and_three_way() {
        let mut f = tempfile::NamedTempFile::new().unwrap();
        writeln!(f, "p\th\tcontradiction").unwrap();
        writeln!(f, "p2\th2\tneutral\tcustom-id").unwrap();
        let result = load_dataset(f.path(), DataFormat::Tsv, 3, &FieldMap::default(), "t").unwrap();
        assert_eq!(result.pairs.len(), 2);
        assert_eq!(result.pairs[1].id, "custom-id");
        assert!(result.pairs.iter().all(|p| p.arity_consistent()));
    }

    #[test]
    fn empty_file_empty_report() {
        let f = tempfile::NamedTempFile::new().unwrap();
        let result = load_dataset(f.path(), DataFormat::Jsonl, 2, &FieldMap::default(), "t").unwrap();
        assert!(result.pairs.is_empty());
        let report = majority_baseline("t", &result.pairs, result.skipped);
        assert_eq!(report.n, 0);
        assert_eq!(report.accuracy, 0.0);
    }

    #[test]
    fn majority_baseline_matches_histogram() {
        let e = GoldLabel::Binary(BinaryLabel::Entails);
        let ne = GoldLabel::Binary(BinaryLabel::NotEntails);
        let pairs = vec![
            pair("a", "b", e, 2, "1"),
            pair("c", "d", e, 2, "2"),
            pair("e", "f", ne, 2, "3"),
        ];
        let report = majority_baseline("t", &pairs, 0);
        assert_eq!(report.majority_label, "entails");
        assert!((report.accuracy - 2.0 / 3.0).abs() < 1e-12);
        assert_eq!(report.delta, 0.0);
    }

    #[test]
    fn single_pair_majority_is_total() {
        let pairs = vec![pair("a", "b", GoldLabel::Binary(BinaryLabel::Entails), 2, "1")];
        let report = majority_baseline("t", &pairs, 0);
        assert_eq!(report.accuracy, 1.0);
    }

    #[test]
    fn report_self_consistency() {
        let lex = LexiconSet::embedded();
        let params = EngineParams::default();
        let pairs = vec![
            pair(
                "The warehouse stored 500 barrels.",
                "The warehouse stored 500 barrels.",
                GoldLabel::Binary(BinaryLabel::Entails),
                2,
                "id-1",
            ),
            pair(
                "The warehouse stored 500 barrels.",
                "The warehouse stored 900 barrels.",
                GoldLabel::Binary(BinaryLabel::NotEntails),
                2,
                "id-2",
            ),
        ];
        let report = evaluate("t", &pairs, 0, &lex, &params);
        let recomputed = report
            .per_pair
            .iter()
            .filter(|r| r.gold == r.predicted)
            .count() as f64
            / report.n as f64;
        assert!((report.accuracy - recomputed).abs() < 1e-12);
        assert!((report.delta - (report.accuracy - report.majority_accuracy)).abs() < 1e-9);
        assert_eq!(report.accuracy, 1.0);
    }

    #[test]
    fn perturbation_flips_shared_quantity() {
        let pairs = vec![pair(
            "In addition to 79 fatalities, some 170 passengers were injured.",
            "The crash took the lives of 79 people and injured some 170.",
            GoldLabel::Binary(BinaryLabel::Entails),
            2,
            "news-1",
        )];
        let result = perturb_entailed(&pairs, 7);
        assert_eq!(result.pairs.len(), 1);
        assert_eq!(result.skipped, 0);
        let perturbed = &result.pairs[0];
        assert_eq!(perturbed.gold, GoldLabel::Binary(BinaryLabel::NotEntails));
        assert_ne!(perturbed.hypothesis, pairs[0].hypothesis);
        assert!(perturbed.hypothesis.contains("78") || perturbed.hypothesis.contains("80"));
        // Everything but the one numeric token is unchanged.
        let orig: Vec<String> = tokenize(&pairs[0].hypothesis).into_iter().map(|t| t.text).collect();
        let new: Vec<String> = tokenize(&perturbed.hypothesis).into_iter().map(|t| t.text).collect();
        assert_eq!(orig.len(), new.len());
        let diffs: Vec<usize> =
            (0..orig.len()).filter(|&i| orig[i] != new[i]).collect();
        assert_eq!(diffs.len(), 1);
    }

    #[test]
    fn perturbation_skips_unshared() {
        let pairs = vec![pair(
            "The attack killed 4 people.",
            "People died in the attack.",
            GoldLabel::Binary(BinaryLabel::Entails),
            2,
            "x",
        )];
        let result = perturb_entailed(&pairs, 7);
        assert!(result.pairs.is_empty());
        assert_eq!(result.skipped, 1);
    }

    #[test]
    fn perturbation_deterministic() {
        let pairs = vec![
            pair("He had 9 pears and 3 apples.", "Bob had 9 pears.", GoldLabel::Binary(BinaryLabel::Entails), 2, "a"),
            pair("She ran 5.0 miles.", "She ran 5.0 miles.", GoldLabel::Binary(BinaryLabel::Entails), 2, "b"),
        ];
        let r1 = perturb_entailed(&pairs, 42);
        let r2 = perturb_entailed(&pairs, 42);
        assert_eq!(r1.pairs.len(), r2.pairs.len());
        for (x, y) in r1.pairs.iter().zip(&r2.pairs) {
            assert_eq!(x.hypothesis, y.hypothesis);
        }
    }

    #[test]
    fn bump_decimal_last_place() {
        assert_eq!(bump_token("55.0", true).unwrap(), "55.1");
        assert_eq!(bump_token("55.0", false).unwrap(), "54.9");
        assert_eq!(bump_token("79", true).unwrap(), "80");
        assert_eq!(bump_token("0", false).unwrap(), "1");
        assert_eq!(bump_token("7,000", true).unwrap(), "7001");
    }

    #[test]
    fn config_roundtrip() {
        let cfg = RunConfig::with_standard_profiles(Path::new("/tmp/root"));
        let text = toml::to_string(&cfg).unwrap();
        let back: RunConfig = toml::from_str(&text).unwrap();
        assert_eq!(back.datasets.len(), 5);
        assert_eq!(back.engine.max_solutions, 50);
        assert_eq!(back.datasets["stress-test"].arity, 3);
    }
}

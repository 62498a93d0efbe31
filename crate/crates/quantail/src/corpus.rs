//! Seeded generators for the bundled evaluation corpora.
//!
//! The five bundled test sets are reconstructions, not the originally
//! released files: they reproduce each set's published size, class balance,
//! framing (2-way vs 3-way), and quantitative-phenomenon profile. The
//! word-problem set pairs world-building premises with hypothesis templates
//! holding a correct or sampled wrong guess; the quantifier set substitutes
//! bound phrases into quantity-bearing sentences; the news/forum sets mix
//! exact matches, approximations, ranges, arithmetic, and verbal-inference
//! phenomena at fixed rates modeled on the published error profile.
//!
//! Generation is deterministic per seed (`cargo run --example
//! build_eval_sets` regenerates the files byte-identically). Files from the
//! original benchmark release can be swapped in through the same loader and
//! config profiles.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::numset::{BinaryLabel, EntailmentLabel, GoldLabel, SentencePair};

/// One generated record with its phenomenon tag.
#[derive(Clone, Debug)]
pub struct CorpusRecord {
    pub pair: SentencePair,
    pub phenomenon: &'static str,
}

fn mk_pair(
    dataset: &str,
    idx: usize,
    premise: String,
    hypothesis: String,
    gold: GoldLabel,
    arity: u8,
) -> SentencePair {
    SentencePair {
        id: format!("{}-{:05}", dataset, idx),
        premise,
        hypothesis,
        gold,
        dataset: dataset.to_string(),
        arity,
    }
}

fn entails() -> GoldLabel {
    GoldLabel::Binary(BinaryLabel::Entails)
}

fn not_entails() -> GoldLabel {
    GoldLabel::Binary(BinaryLabel::NotEntails)
}

fn three(label: EntailmentLabel) -> GoldLabel {
    GoldLabel::ThreeWay(label)
}

fn sub_seed(seed: u64, tag: &str) -> u64 {
    tag.bytes().fold(seed, |acc, b| acc.wrapping_mul(0x100000001b3).wrapping_add(b as u64))
}

/// Write records as JSONL with the default field names plus a phenomenon tag.
pub fn write_jsonl(path: &Path, records: &[CorpusRecord]) -> std::io::Result<()> {
    let mut out = String::new();
    for r in records {
        let line = serde_json::json!({
            "id": r.pair.id,
            "sentence1": r.pair.premise,
            "sentence2": r.pair.hypothesis,
            "gold_label": r.pair.gold.as_str(),
            "phenomenon": r.phenomenon,
        });
        writeln!(out, "{}", line).expect("string write");
    }
    fs::write(path, out)
}

// ---------------------------------------------------------------------------
// AwpNLI: arithmetic word problems, 722 pairs, 2-way, balanced.
// ---------------------------------------------------------------------------

const AGENTS: &[&str] = &[
    "Gary", "Joan", "Sara", "Mike", "Fred", "Alyssa", "Sam", "Keith", "Jason", "Melanie",
    "Dan", "Nancy", "Tom", "Sandy", "Benny", "Connie", "Wayne", "Irene", "Oscar", "Ruth",
];

const COUNT_ITEMS: &[(&str, &str)] = &[
    ("marbles", "a trade"),
    ("seashells", "the beach trip"),
    ("pencils", "the art class"),
    ("crayons", "the drawer"),
    ("cards", "a trade"),
    ("books", "the shelf"),
    ("stickers", "the album"),
    ("oranges", "the basket"),
    ("peaches", "the orchard"),
    ("cookies", "the jar"),
    ("balloons", "the party"),
    ("stamps", "the collection"),
];

const MONEY_ITEMS: &[&str] = &[
    "a pet snake", "a video game", "a puzzle", "a toy truck", "a baseball hat",
    "a sandwich", "a model plane", "a deck of cards", "a music album", "a kite",
];

struct Awp {
    premise: String,
    hypothesis_head: String,
    hypothesis_tail: String,
    answer: f64,
    decimal: bool,
    phenomenon: &'static str,
}

fn fmt_num(v: f64, decimal: bool) -> String {
    if decimal {
        format!("{:.1}", v)
    } else {
        format!("{}", v.round() as i64)
    }
}

fn awp_problem(rng: &mut ChaCha8Rng, kind: usize) -> Awp {
    let agent = AGENTS[rng.gen_range(0..AGENTS.len())];
    match kind {
        // Money subtraction, decimal surfaces.
        0 => {
            let a = rng.gen_range(20..95) as f64;
            let b = rng.gen_range(5..(a as i64 - 1).max(6)) as f64;
            let item = MONEY_ITEMS[rng.gen_range(0..MONEY_ITEMS.len())];
            Awp {
                premise: format!(
                    "{agent} had {} dollars. {agent} spent {} dollars on {item}.",
                    fmt_num(a, true),
                    fmt_num(b, true)
                ),
                hypothesis_head: format!("{agent} has "),
                hypothesis_tail: " dollars left.".to_string(),
                answer: a - b,
                decimal: true,
                phenomenon: "arithmetic-subtraction",
            }
        }
        // Pocket-money style integer subtraction with a distractor.
        1 => {
            let a = rng.gen_range(5..13) as f64;
            let b = rng.gen_range(2..(a as i64 - 1).max(3)) as f64;
            let d = rng.gen_range(2..13) as f64;
            let (item, _) = COUNT_ITEMS[rng.gen_range(0..COUNT_ITEMS.len())];
            Awp {
                premise: format!(
                    "{agent} counted {} {item} in the morning and traded away {} {item}. A neighbor counted {} {item}.",
                    fmt_num(a, false),
                    fmt_num(b, false),
                    fmt_num(d, false)
                ),
                hypothesis_head: format!("{agent} has "),
                hypothesis_tail: format!(" {item} left."),
                answer: a - b,
                decimal: false,
                phenomenon: "arithmetic-subtraction",
            }
        }
        // Addition over counted objects, small numbers, with a distractor.
        2 | 3 => {
            let a = rng.gen_range(3..10) as f64;
            let b = rng.gen_range(3..9) as f64;
            let d = rng.gen_range(2..13) as f64;
            let (item, source) = COUNT_ITEMS[rng.gen_range(0..COUNT_ITEMS.len())];
            Awp {
                premise: format!(
                    "{agent} had {} {item}. {agent} got {} more {item} from {source}. A cousin had {} {item} and a neighbor kept {} {item}.",
                    fmt_num(a, false),
                    fmt_num(b, false),
                    fmt_num(d, false),
                    fmt_num((d + b).min(15.0).max(2.0), false)
                ),
                hypothesis_head: format!("{agent} has "),
                hypothesis_tail: format!(" {item} now."),
                answer: a + b,
                decimal: false,
                phenomenon: "arithmetic-addition",
            }
        }
        // Subtraction over counted objects, small numbers, with a distractor.
        4 | 5 => {
            let a = rng.gen_range(6..14) as f64;
            let b = rng.gen_range(2..(a as i64 - 1).max(3)) as f64;
            let d = rng.gen_range(2..13) as f64;
            let (item, _) = COUNT_ITEMS[rng.gen_range(0..COUNT_ITEMS.len())];
            Awp {
                premise: format!(
                    "{agent} had {} {item}. {agent} gave {} {item} to a friend whose sister had {} {item} and later found {} {item}.",
                    fmt_num(a, false),
                    fmt_num(b, false),
                    fmt_num(d, false),
                    fmt_num((a + d) / 2.0, false)
                ),
                hypothesis_head: format!("{agent} has "),
                hypothesis_tail: format!(" {item} left."),
                answer: a - b,
                decimal: false,
                phenomenon: "arithmetic-subtraction",
            }
        }
        // Rate multiplication ("each").
        6 => {
            let baskets = rng.gen_range(2..7) as f64;
            let per = rng.gen_range(2..9) as f64;
            let d = rng.gen_range(2..11) as f64;
            let (item, _) = COUNT_ITEMS[rng.gen_range(0..COUNT_ITEMS.len())];
            Awp {
                premise: format!(
                    "{agent} filled {} baskets with {} {item} each and kept {} {item} aside.",
                    fmt_num(baskets, false),
                    fmt_num(per, false),
                    fmt_num(d, false)
                ),
                hypothesis_head: format!("{agent} has "),
                hypothesis_tail: format!(" {item} in total."),
                answer: baskets * per,
                decimal: false,
                phenomenon: "arithmetic-multiplication",
            }
        }
        // Division into equal groups.
        7 => {
            let groups = rng.gen_range(2..7) as f64;
            let per = rng.gen_range(2..8) as f64;
            let total = groups * per;
            let d = rng.gen_range(2..11) as f64;
            let (item, _) = COUNT_ITEMS[rng.gen_range(0..COUNT_ITEMS.len())];
            Awp {
                premise: format!(
                    "{agent} packed {} {item} evenly into {} crates after setting {} {item} aside.",
                    fmt_num(total, false),
                    fmt_num(groups, false),
                    fmt_num(d, false)
                ),
                hypothesis_head: "Each crate holds ".to_string(),
                hypothesis_tail: format!(" {item}."),
                answer: per,
                decimal: false,
                phenomenon: "arithmetic-division",
            }
        }
        // Two-step: add then subtract.
        8 => {
            let a = rng.gen_range(5..15) as f64;
            let b = rng.gen_range(2..9) as f64;
            let c = rng.gen_range(2..(a as i64 + b as i64 - 1).min(9)) as f64;
            let (item, source) = COUNT_ITEMS[rng.gen_range(0..COUNT_ITEMS.len())];
            Awp {
                premise: format!(
                    "{agent} had {} {item}. {agent} got {} more {item} from {source} and lost {} {item}. A cousin had {} {item}.",
                    fmt_num(a, false),
                    fmt_num(b, false),
                    fmt_num(c, false),
                    fmt_num(rng.gen_range(2..13) as f64, false)
                ),
                hypothesis_head: format!("{agent} has "),
                hypothesis_tail: format!(" {item} now."),
                answer: a + b - c,
                decimal: false,
                phenomenon: "arithmetic-two-step",
            }
        }
        // Comparative hypothesis: composition between incompatible units.
        _ => {
            let a = rng.gen_range(3..12) as f64;
            let diff = rng.gen_range(1..6) as f64;
            Awp {
                premise: format!(
                    "There were {} birds and {} nests in the yard.",
                    fmt_num(a, false),
                    fmt_num(a + diff, false)
                ),
                hypothesis_head: "There were ".to_string(),
                hypothesis_tail: " more nests than birds in the yard.".to_string(),
                answer: diff,
                decimal: false,
                phenomenon: "comparison-across-units",
            }
        }
    }
}

/// Wrong guesses come from a window of ten around the correct answer (five
/// for small answers): integers for integer answers, one-decimal reals
/// otherwise.
fn wrong_guess(rng: &mut ChaCha8Rng, answer: f64, decimal: bool) -> f64 {
    let half = if answer < 5.0 { 2.5 } else { 5.0 };
    loop {
        let g = if decimal {
            let raw = rng.gen_range((answer - half).max(0.1)..answer + half);
            (raw * 10.0).round() / 10.0
        } else {
            let lo = (answer - half).max(0.0).round() as i64;
            let hi = (answer + half).round() as i64;
            rng.gen_range(lo..=hi) as f64
        };
        if (g - answer).abs() > 1e-9 && g >= 0.0 {
            return g;
        }
    }
}

pub fn generate_awpnli(seed: u64) -> Vec<CorpusRecord> {
    let mut rng = ChaCha8Rng::seed_from_u64(sub_seed(seed, "awpnli"));
    let total = 722usize;
    let mut records = Vec::with_capacity(total);
    for idx in 0..total {
        let problem = awp_problem(&mut rng, (idx / 2) % 10);
        let entailed = idx % 2 == 0;
        let guess = if entailed {
            problem.answer
        } else {
            wrong_guess(&mut rng, problem.answer, problem.decimal)
        };
        let hypothesis = format!(
            "{}{}{}",
            problem.hypothesis_head,
            fmt_num(guess, problem.decimal),
            problem.hypothesis_tail
        );
        let gold = if entailed { entails() } else { not_entails() };
        records.push(CorpusRecord {
            pair: mk_pair("awpnli", idx, problem.premise, hypothesis, gold, 2),
            phenomenon: problem.phenomenon,
        });
    }
    records
}

// ---------------------------------------------------------------------------
// Stress Test: quantifier substitution over word-problem sentences,
// 7500 pairs, 3-way, uniform classes.
// ---------------------------------------------------------------------------

/// A premise sentence with one substitutable target quantity.
struct StressBase {
    prefix: String,
    value: i64,
    unit: String,
    suffix: String,
    /// Unit for the neutral entity swap.
    swap_unit: String,
    /// Hypernym not covered by the unit-synonym lexicon.
    hypernym: Option<String>,
}

impl StressBase {
    fn premise(&self) -> String {
        format!("{}{} {}{}", self.prefix, self.value, self.unit, self.suffix)
    }

    fn with_quantity(&self, phrase: &str, unit: &str) -> String {
        format!("{}{} {}{}", self.prefix, phrase, unit, self.suffix)
    }
}

fn stress_base(rng: &mut ChaCha8Rng) -> StressBase {
    let v = rng.gen_range(20..900);
    let companies = ["NHAI", "Zenith Corp", "the council", "Acme Ltd", "the ministry"];
    let company = companies[rng.gen_range(0..companies.len())];
    match rng.gen_range(0..8) {
        0 => StressBase {
            prefix: format!("{company} employs "),
            value: v,
            unit: "men".into(),
            suffix: format!(
                " to build a highway of {} km in {} days working {} hours a day",
                rng.gen_range(2..9),
                rng.gen_range(20..80),
                rng.gen_range(6..12)
            ),
            swap_unit: "women".into(),
            hypernym: Some("workers".into()),
        },
        1 => StressBase {
            prefix: "A grocer sells ".into(),
            value: v,
            unit: "apples".into(),
            suffix: format!(" and {} oranges every morning", rng.gen_range(10..200)),
            swap_unit: "pears".into(),
            hypernym: Some("fruits".into()),
        },
        2 => StressBase {
            prefix: "The factory shipped ".into(),
            value: v,
            unit: "sedans".into(),
            suffix: format!(" in {} weeks", rng.gen_range(2..20)),
            swap_unit: "tractors".into(),
            hypernym: Some("automobiles".into()),
        },
        3 => StressBase {
            prefix: "A train covers ".into(),
            value: v,
            unit: "km".into(),
            suffix: format!(" in {} hours at a steady speed", rng.gen_range(2..12)),
            swap_unit: "miles".into(),
            hypernym: None,
        },
        4 => StressBase {
            prefix: "The school enrolled ".into(),
            value: v,
            unit: "boys".into(),
            suffix: format!(" across {} classrooms this term", rng.gen_range(4..30)),
            swap_unit: "girls".into(),
            hypernym: Some("pupils".into()),
        },
        5 => StressBase {
            prefix: "A library catalogued ".into(),
            value: v,
            unit: "novels".into(),
            suffix: format!(" during {} months", rng.gen_range(2..12)),
            swap_unit: "atlases".into(),
            hypernym: Some("volumes".into()),
        },
        6 => StressBase {
            prefix: "The kennel raised ".into(),
            value: v,
            unit: "puppies".into(),
            suffix: format!(" over {} seasons", rng.gen_range(2..8)),
            swap_unit: "kittens".into(),
            hypernym: Some("dogs".into()),
        },
        _ => StressBase {
            prefix: "The vineyard harvested ".into(),
            value: v,
            unit: "tonnes".into(),
            suffix: format!(" of grapes with {} pickers", rng.gen_range(8..60)),
            swap_unit: "crates".into(),
            hypernym: None,
        },
    }
}

fn entailed_bound(rng: &mut ChaCha8Rng, v: i64) -> String {
    match rng.gen_range(0..4) {
        0 => format!("less than {}", v + rng.gen_range(1..=v.max(2))),
        1 => format!("more than {}", rng.gen_range(0..v)),
        2 => format!("at least {}", rng.gen_range(1..=v)),
        _ => format!("at most {}", v + rng.gen_range(0..=v.max(1))),
    }
}

fn contradicted_phrase(rng: &mut ChaCha8Rng, v: i64) -> String {
    match rng.gen_range(0..3) {
        0 => format!("less than {}", rng.gen_range(1..=v.max(1))),
        1 => format!("more than {}", v + rng.gen_range(0..=v.max(1))),
        _ => {
            // An exact different value contradicts under scalar implicature.
            let delta = rng.gen_range(1..=9);
            if rng.gen_bool(0.5) && v > delta {
                format!("{}", v - delta)
            } else {
                format!("{}", v + delta)
            }
        }
    }
}

pub fn generate_stress_test(seed: u64) -> Vec<CorpusRecord> {
    let mut rng = ChaCha8Rng::seed_from_u64(sub_seed(seed, "stress"));
    let per_class = 2500usize;
    // Engine-hard share per class, modeled on the published error profile.
    let hard_e = 905usize;
    let hard_c = 915usize;
    let hard_n = 930usize;

    let mut schedule: Vec<(EntailmentLabel, bool)> = Vec::with_capacity(3 * per_class);
    for i in 0..per_class {
        schedule.push((EntailmentLabel::Entailment, i < hard_e));
        schedule.push((EntailmentLabel::Contradiction, i < hard_c));
        schedule.push((EntailmentLabel::Neutral, i < hard_n));
    }
    schedule.shuffle(&mut rng);

    let mut records = Vec::with_capacity(schedule.len());
    for (idx, (label, hard)) in schedule.into_iter().enumerate() {
        let base = stress_base(&mut rng);
        let premise = base.premise();
        let (hypothesis, phenomenon) = match (label, hard) {
            (EntailmentLabel::Entailment, false) => {
                let phrase = entailed_bound(&mut rng, base.value);
                (base.with_quantity(&phrase, &base.unit), "quantifier-entailed")
            }
            (EntailmentLabel::Entailment, true) => {
                // Hypernym step the lexicon does not cover.
                let unit = base.hypernym.clone().unwrap_or_else(|| "units".to_string());
                let phrase = entailed_bound(&mut rng, base.value);
                (base.with_quantity(&phrase, &unit), "quantifier-lexical-gap")
            }
            (EntailmentLabel::Contradiction, false) => {
                let phrase = contradicted_phrase(&mut rng, base.value);
                (base.with_quantity(&phrase, &base.unit), "quantifier-contradicted")
            }
            (EntailmentLabel::Contradiction, true) => {
                let unit = base.hypernym.clone().unwrap_or_else(|| "units".to_string());
                let phrase = contradicted_phrase(&mut rng, base.value);
                (base.with_quantity(&phrase, &unit), "quantifier-lexical-gap")
            }
            (EntailmentLabel::Neutral, false) => {
                let phrase = entailed_bound(&mut rng, base.value);
                (base.with_quantity(&phrase, &base.swap_unit), "entity-swap")
            }
            (EntailmentLabel::Neutral, true) => {
                // Person-type hypernymy overreach or an unparseable fraction.
                if rng.gen_bool(0.5) && base.unit == "men" {
                    let phrase = entailed_bound(&mut rng, base.value);
                    (base.with_quantity(&phrase, "Germans"), "person-overreach")
                } else {
                    let hypothesis = format!(
                        "{}{} {}{} covering 3/5 of the plan",
                        base.prefix, base.value, base.unit, base.suffix
                    );
                    (hypothesis, "fraction-unsupported")
                }
            }
        };
        records.push(CorpusRecord {
            pair: mk_pair("stress-test", idx, premise, hypothesis, three(label), 3),
            phenomenon,
        });
    }
    records
}

// ---------------------------------------------------------------------------
// NewsNLI: news-wire pairs, 968 pairs, 2-way (491 entails / 477 not).
// ---------------------------------------------------------------------------

const CITIES: &[&str] = &[
    "Baltimore", "Denver", "Atlanta", "Lagos", "Manila", "Karachi", "Lyon", "Osaka",
    "Porto", "Quito", "Nairobi", "Adelaide",
];

const PERSON_NOUNS: &[(&str, &str)] = &[
    ("fatalities", "people"),
    ("passengers", "travelers"),
    ("soldiers", "troops"),
    ("protesters", "demonstrators"),
    ("workers", "employees"),
];

fn news_record(rng: &mut ChaCha8Rng, idx: usize, kind: &'static str) -> CorpusRecord {
    let city = CITIES[rng.gen_range(0..CITIES.len())];
    let (gold, premise, hypothesis) = match kind {
        // Engine-friendly entailments.
        "exact-match" => {
            let killed = rng.gen_range(3..120);
            let injured = killed + rng.gen_range(5..90);
            let (unit, synonym) = PERSON_NOUNS[rng.gen_range(0..PERSON_NOUNS.len())];
            (
                entails(),
                format!(
                    "In addition to {killed} {unit}, some {injured} residents were injured in {city}, officials said."
                ),
                format!("The crash in {city} killed {killed} {synonym} and injured about {injured} residents."),
            )
        }
        "approximation" => {
            let rounded = rng.gen_range(13..25) * 100;
            let exact = rounded + 25;
            (
                entails(),
                format!("Rwanda has dispatched {exact} soldiers to the joint mission in {city}."),
                format!("Rwanda has dispatched some {rounded} soldiers to the mission."),
            )
        }
        "bound" => {
            let share = rng.gen_range(30..49);
            (
                entails(),
                format!("With most precincts counted, Dewhurst held {share} % of the vote in {city}."),
                format!("Dewhurst held less than 50 % of the vote in {city}."),
            )
        }
        "range" => {
            let lo = rng.gen_range(10..40);
            let hi = lo + rng.gen_range(5..30);
            // A fresh upper bound, so perturbing the shared numeral cannot
            // leave the pair semantically entailed.
            let cap = hi + rng.gen_range(1..10);
            (
                entails(),
                format!("Between {lo} and {hi} people were trapped in the casino in {city}."),
                format!("Up to {cap} people were trapped in the casino in {city}."),
            )
        }
        // Engine-hard entailments (verbal or multi-step reasoning).
        "counting" => {
            let age_a = rng.gen_range(13..19);
            let age_b = rng.gen_range(13..19);
            (
                entails(),
                format!("Emmanuel Miller, {age_a}, and Zachary Watson, {age_b}, are charged as adults, police in {city} said."),
                "Two teen suspects were charged as adults.".to_string(),
            )
        }
        "ordinal" => {
            let year = rng.gen_range(30..60);
            (
                entails(),
                format!("Second-placed Nancy celebrated their {year}th anniversary with a win."),
                "Nancy stayed second with a win.".to_string(),
            )
        }
        "verbal-step" => {
            let pct = rng.gen_range(3..9) * 100;
            (
                entails(),
                format!("If the abuser has access to a gun, it increases chances of death by {pct} %."),
                format!("Victims are {} times more likely to die if the abuser is armed.", pct / 100),
            )
        }
        "implicit-unit" => {
            let dead = rng.gen_range(2..9);
            let hurt = dead * rng.gen_range(5..20);
            (
                entails(),
                format!("A mortar attack in {city} killed {dead} people and injured {hurt}."),
                format!("{hurt} were hurt in the {city} attack."),
            )
        }
        // Not-entails.
        "value-mismatch" => {
            let n = rng.gen_range(10..400);
            let delta = rng.gen_range(1..9);
            let (unit, synonym) = PERSON_NOUNS[rng.gen_range(0..PERSON_NOUNS.len())];
            (
                not_entails(),
                format!("Rescue teams reported {n} {unit} were evacuated from {city} overnight."),
                format!("Rescue teams reported {} {synonym} were evacuated from {city} overnight.", n + delta),
            )
        }
        "unrelated-quantity" => {
            let n = rng.gen_range(5..60);
            let m = rng.gen_range(2..50);
            (
                not_entails(),
                format!("The council approved {n} housing permits in {city} last month."),
                format!("The council hired {m} engineers in {city} last month."),
            )
        }
        "unmet-bound" => {
            let n = rng.gen_range(20..45);
            (
                not_entails(),
                format!("Organizers said about {n} buses left the {city} depot."),
                format!("Organizers said more than {} buses left the {city} depot.", n * 2),
            )
        }
        "speculation" => {
            let n = rng.gen_range(100..900);
            (
                not_entails(),
                format!("The mayor of {city} hopes to hire {n} firefighters next year."),
                format!("{city} hired {n} firefighters."),
            )
        }
        _ => unreachable!("unknown news kind"),
    };
    CorpusRecord { pair: mk_pair("newsnli", idx, premise, hypothesis, gold, 2), phenomenon: kind }
}

pub fn generate_newsnli(seed: u64) -> Vec<CorpusRecord> {
    let mut rng = ChaCha8Rng::seed_from_u64(sub_seed(seed, "newsnli"));
    // 491 entails / 477 not-entails.
    let mut kinds: Vec<&'static str> = Vec::new();
    kinds.extend(std::iter::repeat_n("exact-match", 95));
    kinds.extend(std::iter::repeat_n("approximation", 40));
    kinds.extend(std::iter::repeat_n("bound", 25));
    kinds.extend(std::iter::repeat_n("range", 20));
    kinds.extend(std::iter::repeat_n("counting", 120));
    kinds.extend(std::iter::repeat_n("ordinal", 70));
    kinds.extend(std::iter::repeat_n("verbal-step", 61));
    kinds.extend(std::iter::repeat_n("implicit-unit", 60));
    assert_eq!(kinds.len(), 491);
    kinds.extend(std::iter::repeat_n("value-mismatch", 180));
    kinds.extend(std::iter::repeat_n("unrelated-quantity", 150));
    kinds.extend(std::iter::repeat_n("unmet-bound", 87));
    kinds.extend(std::iter::repeat_n("speculation", 60));
    assert_eq!(kinds.len(), 968);
    kinds.shuffle(&mut rng);
    kinds
        .into_iter()
        .enumerate()
        .map(|(idx, kind)| news_record(&mut rng, idx, kind))
        .collect()
}

// ---------------------------------------------------------------------------
// RTE-Quant: formal newswire entailment, 166 pairs, 2-way (96 / 70).
// ---------------------------------------------------------------------------

fn rte_record(rng: &mut ChaCha8Rng, idx: usize, kind: &'static str) -> CorpusRecord {
    let city = CITIES[rng.gen_range(0..CITIES.len())];
    let (gold, premise, hypothesis) = match kind {
        "sales-approx" => {
            let n = rng.gen_range(2..19);
            (
                entails(),
                format!("After the deal closes, Teva will generate sales of about $ {n} billion a year, the company said."),
                format!("Teva expects sales of about $ {n} billion a year."),
            )
        }
        "exact-restate" => {
            let n = rng.gen_range(100..9000);
            (
                entails(),
                format!("The charity said donations worth {n} dollars reached the {city} office during the appeal."),
                format!("Donations of {n} dollars reached the {city} office."),
            )
        }
        "bound-entailed" => {
            let n = rng.gen_range(50..700);
            (
                entails(),
                format!("Court filings show the firm laid off {n} workers at its {city} plant over two quarters."),
                format!("The firm laid off at least {} workers in {city}.", n.min(n)),
            )
        }
        "verbal-entailed" => {
            let n = rng.gen_range(2..9);
            (
                entails(),
                format!("Treacherous currents took {n} lives on the Alabama Gulf coast during the holiday weekend."),
                format!("Rip currents killed {n} swimmers in Alabama."),
            )
        }
        "arithmetic-entailed" => {
            let a = rng.gen_range(10..60);
            let b = rng.gen_range(5..40);
            (
                entails(),
                format!("The {city} shelter took in {a} cats in June and another {b} cats in July."),
                format!("The {city} shelter took in {} cats over the two months.", a + b),
            )
        }
        "mismatch" => {
            let n = rng.gen_range(100..900);
            let delta = rng.gen_range(10..90);
            (
                not_entails(),
                format!("Regulators fined the bank {n} million dollars over the {city} affair."),
                format!("Regulators fined the bank {} million dollars over the {city} affair.", n + delta),
            )
        }
        "different-topic" => {
            let n = rng.gen_range(3..40);
            let m = rng.gen_range(2..30);
            (
                not_entails(),
                format!("The exhibition in {city} displayed {n} sculptures loaned from private collections."),
                format!("The exhibition in {city} sold {m} paintings."),
            )
        }
        "bound-not-met" => {
            let n = rng.gen_range(20..60);
            (
                not_entails(),
                format!("Police confirmed {n} demonstrators were detained near the {city} parliament."),
                format!("Police confirmed more than {} demonstrators were detained near the {city} parliament.", n * 3),
            )
        }
        _ => unreachable!("unknown rte kind"),
    };
    CorpusRecord { pair: mk_pair("rte-quant", idx, premise, hypothesis, gold, 2), phenomenon: kind }
}

pub fn generate_rte_quant(seed: u64) -> Vec<CorpusRecord> {
    let mut rng = ChaCha8Rng::seed_from_u64(sub_seed(seed, "rte-quant"));
    // 96 entails / 70 not-entails.
    let mut kinds: Vec<&'static str> = Vec::new();
    kinds.extend(std::iter::repeat_n("sales-approx", 6));
    kinds.extend(std::iter::repeat_n("exact-restate", 10));
    kinds.extend(std::iter::repeat_n("bound-entailed", 8));
    kinds.extend(std::iter::repeat_n("verbal-entailed", 52));
    kinds.extend(std::iter::repeat_n("arithmetic-entailed", 20));
    assert_eq!(kinds.len(), 96);
    kinds.extend(std::iter::repeat_n("mismatch", 30));
    kinds.extend(std::iter::repeat_n("different-topic", 25));
    kinds.extend(std::iter::repeat_n("bound-not-met", 15));
    assert_eq!(kinds.len(), 166);
    kinds.shuffle(&mut rng);
    kinds
        .into_iter()
        .enumerate()
        .map(|(idx, kind)| rte_record(&mut rng, idx, kind))
        .collect()
}

// ---------------------------------------------------------------------------
// RedditNLI: economics headlines, 250 pairs, 3-way (146 n / 52 e / 52 c).
// ---------------------------------------------------------------------------

const COMMODITIES: &[(&str, &str)] = &[
    ("Oil", "barrel"),
    ("Gold", "ounce"),
    ("Wheat", "bushel"),
    ("Copper", "pound"),
    ("Gas", "gallon"),
];

fn reddit_record(rng: &mut ChaCha8Rng, idx: usize, kind: &'static str) -> CorpusRecord {
    let (commodity, unit) = COMMODITIES[rng.gen_range(0..COMMODITIES.len())];
    let (gold, premise, hypothesis) = match kind {
        "exact-echo" => {
            let n = rng.gen_range(20..180);
            (
                three(EntailmentLabel::Entailment),
                format!("{commodity} prices rise to $ {n} a {unit} amid supply fears"),
                format!("{commodity} rises to $ {n} a {unit}"),
            )
        }
        "ratio-echo" => {
            let pct = rng.gen_range(1..5);
            (
                three(EntailmentLabel::Entailment),
                format!("Oxfam says richest {pct} percent to own more than half of global wealth by next year"),
                format!("Richest {pct} % to own more than half of global wealth, Oxfam says"),
            )
        }
        "verbal-entailed" => {
            let pct = rng.gen_range(5..30);
            (
                three(EntailmentLabel::Entailment),
                format!("Unemployment claims plunge {pct} percent as hiring accelerates nationwide"),
                "Jobless claims are falling as hiring picks up".to_string(),
            )
        }
        "flux-conflict" => {
            let n = rng.gen_range(20..180);
            (
                three(EntailmentLabel::Contradiction),
                format!("{commodity} prices rise to $ {n} a {unit} amid supply fears"),
                format!("{commodity} prices fall to $ {n} a {unit} amid supply fears"),
            )
        }
        "value-conflict" => {
            let n = rng.gen_range(20..120);
            let m = n + rng.gen_range(15..80);
            (
                three(EntailmentLabel::Contradiction),
                format!("{commodity} settles at $ {n} a {unit} after volatile session"),
                format!("{commodity} settles at $ {m} a {unit} after volatile session"),
            )
        }
        "verbal-contradiction" => {
            let pct = rng.gen_range(2..15);
            (
                three(EntailmentLabel::Contradiction),
                format!("Central bank holds rates steady at {pct} percent for a sixth straight meeting"),
                format!("Central bank abandons its {pct} percent rate policy"),
            )
        }
        "modal-neutral" => {
            let pct = rng.gen_range(20..40);
            (
                three(EntailmentLabel::Neutral),
                format!("Obama cuts tax rate to {pct} % for manufacturers"),
                format!("Obama wants to cut tax rate to {pct} % as part of overhaul"),
            )
        }
        "forecast-neutral" => {
            let n = rng.gen_range(20..180);
            (
                three(EntailmentLabel::Neutral),
                format!("{commodity} trades at $ {n} a {unit} in early session"),
                format!("Analysts expect {commodity} to reach $ {n} a {unit} by December"),
            )
        }
        "topic-neutral" => {
            let n = rng.gen_range(2..9);
            let m = rng.gen_range(10..90);
            (
                three(EntailmentLabel::Neutral),
                format!("Eurozone inflation hits {n} percent, highest in a decade"),
                format!("Housing starts climb {m} percent in the Eurozone"),
            )
        }
        _ => unreachable!("unknown reddit kind"),
    };
    CorpusRecord { pair: mk_pair("redditnli", idx, premise, hypothesis, gold, 3), phenomenon: kind }
}

pub fn generate_redditnli(seed: u64) -> Vec<CorpusRecord> {
    let mut rng = ChaCha8Rng::seed_from_u64(sub_seed(seed, "redditnli"));
    // 146 neutral / 52 entailment / 52 contradiction.
    let mut kinds: Vec<&'static str> = Vec::new();
    kinds.extend(std::iter::repeat_n("exact-echo", 22));
    kinds.extend(std::iter::repeat_n("ratio-echo", 10));
    kinds.extend(std::iter::repeat_n("verbal-entailed", 20));
    kinds.extend(std::iter::repeat_n("flux-conflict", 16));
    kinds.extend(std::iter::repeat_n("value-conflict", 16));
    kinds.extend(std::iter::repeat_n("verbal-contradiction", 20));
    kinds.extend(std::iter::repeat_n("modal-neutral", 42));
    kinds.extend(std::iter::repeat_n("forecast-neutral", 25));
    kinds.extend(std::iter::repeat_n("topic-neutral", 79));
    assert_eq!(kinds.len(), 250);
    kinds.shuffle(&mut rng);
    kinds
        .into_iter()
        .enumerate()
        .map(|(idx, kind)| reddit_record(&mut rng, idx, kind))
        .collect()
}

/// Generate all five corpora under `data_dir`, returning (name, count) rows.
pub fn generate_all(data_dir: &Path, seed: u64) -> std::io::Result<Vec<(String, usize)>> {
    fs::create_dir_all(data_dir)?;
    let sets: Vec<(&str, Vec<CorpusRecord>)> = vec![
        ("rte_quant.jsonl", generate_rte_quant(seed)),
        ("newsnli.jsonl", generate_newsnli(seed)),
        ("redditnli.jsonl", generate_redditnli(seed)),
        ("stress_test.jsonl", generate_stress_test(seed)),
        ("awpnli.jsonl", generate_awpnli(seed)),
    ];
    let mut rows = Vec::new();
    for (file, records) in sets {
        write_jsonl(&data_dir.join(file), &records)?;
        rows.push((file.to_string(), records.len()));
    }
    Ok(rows)
}

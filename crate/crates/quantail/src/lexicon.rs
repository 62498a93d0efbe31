//! Gazetteers and lexicons: approximators, flux verbs, units, synonyms,
//! person types, written-number words, and magnitude suffixes.
//!
//! Lexicon files are plain UTF-8, one entry per line; maps are tab-separated
//! key-value lines (one pair per line, repeated keys accumulate). All lookups
//! are case-insensitive. A full set is embedded in the binary; any file found
//! in a configured lexicon directory overrides the embedded one.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fs;
use std::path::Path;

use num::bigint::BigInt;
use num::rational::BigRational;

use crate::value::{parse_decimal, Num};

const APPROXIMATORS: &str = include_str!("../assets/approximators.txt");
const FLUX_WORDS: &str = include_str!("../assets/flux_words.tsv");
const FREQ_MARKERS: &str = include_str!("../assets/freq_markers.txt");
const UNITS: &str = include_str!("../assets/units.txt");
const UNIT_SYNONYMS: &str = include_str!("../assets/unit_synonyms.tsv");
const PERSON_TYPES: &str = include_str!("../assets/person_types.txt");
const NUMBER_WORDS: &str = include_str!("../assets/number_words.tsv");
const MAGNITUDE_SUFFIXES: &str = include_str!("../assets/magnitude_suffixes.tsv");
const ANTONYMS: &str = include_str!("../assets/antonyms.tsv");

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FluxDirection {
    Increase,
    Decrease,
}

#[derive(Clone, Debug)]
pub struct LexiconSet {
    approximator_words: HashSet<String>,
    approximator_phrases: Vec<Vec<String>>,
    flux_words: HashMap<String, FluxDirection>,
    freq_markers: HashSet<String>,
    known_units: HashSet<String>,
    unit_synonyms: HashMap<String, BTreeSet<String>>,
    person_types: HashSet<String>,
    number_words: HashMap<String, Num>,
    magnitude_suffixes: HashMap<String, Num>,
    antonyms: HashMap<String, BTreeSet<String>>,
}

fn lines(src: &str) -> impl Iterator<Item = &str> {
    src.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#'))
}

fn parse_value(s: &str) -> Option<Num> {
    if let Some((p, q)) = s.split_once('/') {
        let p: BigInt = p.trim().parse().ok()?;
        let q: BigInt = q.trim().parse().ok()?;
        return Some(BigRational::new(p, q));
    }
    parse_decimal(s)
}

impl LexiconSet {
    /// The lexicon set shipped inside the binary.
    pub fn embedded() -> Self {
        let mut lex = LexiconSet {
            approximator_words: HashSet::new(),
            approximator_phrases: Vec::new(),
            flux_words: HashMap::new(),
            freq_markers: HashSet::new(),
            known_units: HashSet::new(),
            unit_synonyms: HashMap::new(),
            person_types: HashSet::new(),
            number_words: HashMap::new(),
            magnitude_suffixes: HashMap::new(),
            antonyms: HashMap::new(),
        };
        lex.set_approximators(APPROXIMATORS);
        lex.set_flux_words(FLUX_WORDS);
        lex.set_freq_markers(FREQ_MARKERS);
        lex.set_units(UNITS);
        lex.set_unit_synonyms(UNIT_SYNONYMS);
        lex.set_person_types(PERSON_TYPES);
        lex.set_number_words(NUMBER_WORDS);
        lex.set_magnitude_suffixes(MAGNITUDE_SUFFIXES);
        lex.set_antonyms(ANTONYMS);
        lex
    }

    /// Embedded lexicons with per-file overrides from `dir` where present.
    pub fn load_dir(dir: &Path) -> std::io::Result<Self> {
        let mut lex = LexiconSet::embedded();
        let over = |name: &str| -> std::io::Result<Option<String>> {
            let path = dir.join(name);
            if path.exists() {
                Ok(Some(fs::read_to_string(path)?))
            } else {
                Ok(None)
            }
        };
        if let Some(s) = over("approximators.txt")? {
            lex.set_approximators(&s);
        }
        if let Some(s) = over("flux_words.tsv")? {
            lex.set_flux_words(&s);
        }
        if let Some(s) = over("freq_markers.txt")? {
            lex.set_freq_markers(&s);
        }
        if let Some(s) = over("units.txt")? {
            lex.set_units(&s);
        }
        if let Some(s) = over("unit_synonyms.tsv")? {
            lex.set_unit_synonyms(&s);
        }
        if let Some(s) = over("person_types.txt")? {
            lex.set_person_types(&s);
        }
        if let Some(s) = over("number_words.tsv")? {
            lex.set_number_words(&s);
        }
        if let Some(s) = over("magnitude_suffixes.tsv")? {
            lex.set_magnitude_suffixes(&s);
        }
        if let Some(s) = over("antonyms.tsv")? {
            lex.set_antonyms(&s);
        }
        Ok(lex)
    }

    fn set_approximators(&mut self, src: &str) {
        self.approximator_words.clear();
        self.approximator_phrases.clear();
        for entry in lines(src) {
            let words: Vec<String> = entry.split_whitespace().map(|w| w.to_lowercase()).collect();
            if words.len() == 1 {
                self.approximator_words.insert(words.into_iter().next().unwrap());
            } else if !words.is_empty() {
                self.approximator_phrases.push(words);
            }
        }
        // Longest phrases first so greedy matching prefers them.
        self.approximator_phrases.sort_by_key(|p| std::cmp::Reverse(p.len()));
    }

    fn set_flux_words(&mut self, src: &str) {
        self.flux_words.clear();
        for entry in lines(src) {
            if let Some((word, dir)) = entry.split_once('\t') {
                let dir = match dir.trim() {
                    "increase" => FluxDirection::Increase,
                    "decrease" => FluxDirection::Decrease,
                    _ => continue,
                };
                self.flux_words.insert(word.trim().to_lowercase(), dir);
            }
        }
    }

    fn set_freq_markers(&mut self, src: &str) {
        self.freq_markers = lines(src).map(|l| l.to_lowercase()).collect();
    }

    fn set_units(&mut self, src: &str) {
        self.known_units = lines(src).map(|l| l.to_lowercase()).collect();
    }

    fn set_unit_synonyms(&mut self, src: &str) {
        self.unit_synonyms.clear();
        for entry in lines(src) {
            if let Some((key, val)) = entry.split_once('\t') {
                self.unit_synonyms
                    .entry(key.trim().to_lowercase())
                    .or_default()
                    .insert(val.trim().to_lowercase());
            }
        }
    }

    fn set_person_types(&mut self, src: &str) {
        self.person_types = lines(src).map(|l| l.to_lowercase()).collect();
    }

    fn set_number_words(&mut self, src: &str) {
        self.number_words.clear();
        for entry in lines(src) {
            if let Some((word, value)) = entry.split_once('\t') {
                if let Some(v) = parse_value(value) {
                    self.number_words.insert(word.trim().to_lowercase(), v);
                }
            }
        }
    }

    fn set_magnitude_suffixes(&mut self, src: &str) {
        self.magnitude_suffixes.clear();
        for entry in lines(src) {
            if let Some((word, value)) = entry.split_once('\t') {
                if let Some(v) = parse_value(value) {
                    self.magnitude_suffixes.insert(word.trim().to_lowercase(), v);
                }
            }
        }
    }

    fn set_antonyms(&mut self, src: &str) {
        self.antonyms.clear();
        for entry in lines(src) {
            if let Some((a, b)) = entry.split_once('\t') {
                let a = a.trim().to_lowercase();
                let b = b.trim().to_lowercase();
                self.antonyms.entry(a.clone()).or_default().insert(b.clone());
                self.antonyms.entry(b).or_default().insert(a);
            }
        }
    }

    pub fn is_approximator(&self, word: &str) -> bool {
        self.approximator_words.contains(&word.to_lowercase())
    }

    /// Length of an approximator phrase starting at `i` in `words`
    /// (lowercased tokens), single words included.
    pub fn approximator_len_at(&self, words: &[String], i: usize) -> Option<usize> {
        for phrase in &self.approximator_phrases {
            if words.len() >= i + phrase.len() && words[i..i + phrase.len()] == phrase[..] {
                return Some(phrase.len());
            }
        }
        if i < words.len() && self.approximator_words.contains(&words[i]) {
            return Some(1);
        }
        None
    }

    pub fn flux_direction(&self, word: &str) -> Option<FluxDirection> {
        self.flux_words.get(&word.to_lowercase()).copied()
    }

    pub fn is_freq_marker(&self, word: &str) -> bool {
        self.freq_markers.contains(&word.to_lowercase())
    }

    pub fn is_known_unit(&self, word: &str) -> bool {
        let lower = word.to_lowercase();
        self.known_units.contains(&lower) || self.known_units.contains(&singularize(&lower))
    }

    /// One-hop synonym/hypernym relation, symmetric.
    pub fn synonym_related(&self, a: &str, b: &str) -> bool {
        let a = a.to_lowercase();
        let b = b.to_lowercase();
        let hit = |x: &str, y: &str| self.unit_synonyms.get(x).is_some_and(|set| set.contains(y));
        hit(&a, &b) || hit(&b, &a)
    }

    pub fn is_person_type(&self, word: &str) -> bool {
        self.person_types.contains(&word.to_lowercase())
    }

    /// Is the word "person" or one lexicon hop away from it?
    pub fn is_person_word(&self, word: &str) -> bool {
        let w = word.to_lowercase();
        w == "person" || self.synonym_related(&w, "person")
    }

    pub fn number_word(&self, word: &str) -> Option<&Num> {
        self.number_words.get(&word.to_lowercase())
    }

    /// Ratio words are the non-integer number words (half, quarter, third).
    pub fn is_ratio_word(&self, word: &str) -> bool {
        self.number_word(word).map(|v| !v.is_integer()).unwrap_or(false)
    }

    pub fn magnitude_suffix(&self, word: &str) -> Option<&Num> {
        self.magnitude_suffixes.get(&word.to_lowercase())
    }

    pub fn antonymous(&self, a: &str, b: &str) -> bool {
        let a = a.to_lowercase();
        let b = b.to_lowercase();
        self.antonyms.get(&a).is_some_and(|set| set.contains(&b))
    }

    /// Extend the synonym map at runtime (used by tests probing monotonicity).
    pub fn add_unit_synonym(&mut self, key: &str, value: &str) {
        self.unit_synonyms
            .entry(key.to_lowercase())
            .or_default()
            .insert(value.to_lowercase());
    }
}

impl Default for LexiconSet {
    fn default() -> Self {
        LexiconSet::embedded()
    }
}

/// Suffix-stripping singularization with a small irregular table.
pub fn singularize(word: &str) -> String {
    let w = word.to_lowercase();
    const IRREGULAR: &[(&str, &str)] = &[
        ("men", "man"),
        ("women", "woman"),
        ("children", "child"),
        ("people", "person"),
        ("persons", "person"),
        ("feet", "foot"),
        ("teeth", "tooth"),
        ("geese", "goose"),
        ("mice", "mouse"),
        ("lives", "life"),
        ("wives", "wife"),
        ("knives", "knife"),
        ("leaves", "leaf"),
        ("loaves", "loaf"),
        ("halves", "half"),
        ("oxen", "ox"),
        ("policemen", "policeman"),
        ("policewomen", "policewoman"),
        ("firemen", "fireman"),
        ("fishermen", "fisherman"),
        ("servicemen", "serviceman"),
        ("businessmen", "businessman"),
    ];
    for (plural, singular) in IRREGULAR {
        if w == *plural {
            return (*singular).to_string();
        }
    }
    if w.len() > 4 && w.ends_with("ies") {
        return format!("{}y", &w[..w.len() - 3]);
    }
    if w.len() > 4
        && (w.ends_with("ches") || w.ends_with("shes") || w.ends_with("sses") || w.ends_with("xes") || w.ends_with("zes"))
    {
        return w[..w.len() - 2].to_string();
    }
    if w.len() > 3
        && w.ends_with('s')
        && !w.ends_with("ss")
        && !w.ends_with("us")
        && !w.ends_with("sis")
        && !w.ends_with("xis")
        && !w.ends_with("'s")
    {
        return w[..w.len() - 1].to_string();
    }
    w
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::value::num_from_i64;

    #[test]
    fn embedded_lookups() {
        let lex = LexiconSet::embedded();
        assert!(lex.is_approximator("About"));
        assert!(lex.is_approximator("some"));
        assert_eq!(lex.flux_direction("rose"), Some(FluxDirection::Increase));
        assert_eq!(lex.flux_direction("fell"), Some(FluxDirection::Decrease));
        assert!(lex.is_freq_marker("per"));
        assert!(lex.is_known_unit("$"));
        assert!(lex.is_known_unit("Dollars"));
        assert!(lex.is_person_type("iraqi"));
        assert!(lex.is_person_word("people") || lex.is_person_word(&singularize("people")));
        assert_eq!(lex.number_word("fifty"), Some(&num_from_i64(50)));
        assert!(lex.is_ratio_word("half"));
        assert!(!lex.is_ratio_word("seven"));
        assert_eq!(lex.magnitude_suffix("bn"), Some(&num_from_i64(1_000_000_000)));
        assert!(lex.antonymous("highest", "lowest"));
        assert!(lex.antonymous("lowest", "highest"));
    }

    #[test]
    fn phrase_approximators() {
        let lex = LexiconSet::embedded();
        let words: Vec<String> =
            ["close", "to", "40"].iter().map(|s| s.to_string()).collect();
        assert_eq!(lex.approximator_len_at(&words, 0), Some(2));
        assert_eq!(lex.approximator_len_at(&words, 2), None);
    }

    #[test]
    fn singularization() {
        assert_eq!(singularize("soldiers"), "soldier");
        assert_eq!(singularize("men"), "man");
        assert_eq!(singularize("people"), "person");
        assert_eq!(singularize("countries"), "country");
        assert_eq!(singularize("glasses"), "glass");
        assert_eq!(singularize("boxes"), "box");
        assert_eq!(singularize("$"), "$");
        assert_eq!(singularize("bus"), "bus");
        assert_eq!(singularize("lambs"), "lamb");
        assert_eq!(singularize("ones"), "one");
        assert_eq!(singularize("iraqis"), "iraqi");
        assert_eq!(singularize("basis"), "basis");
        assert_eq!(singularize("axis"), "axis");
    }
}

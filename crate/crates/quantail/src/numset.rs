//! Grounded quantity representations and entailment-label types.

use std::fmt;

use crate::interval::Interval;

/// Three-way entailment decision.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EntailmentLabel {
    Entailment,
    Contradiction,
    Neutral,
}

impl EntailmentLabel {
    pub fn as_str(&self) -> &'static str {
        match self {
            EntailmentLabel::Entailment => "entailment",
            EntailmentLabel::Contradiction => "contradiction",
            EntailmentLabel::Neutral => "neutral",
        }
    }

    /// Collapse to the 2-way decision: contradiction and neutral both count
    /// as not-entails.
    pub fn to_binary(self) -> BinaryLabel {
        match self {
            EntailmentLabel::Entailment => BinaryLabel::Entails,
            _ => BinaryLabel::NotEntails,
        }
    }
}

impl fmt::Display for EntailmentLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Two-way decision used by the binary test sets.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BinaryLabel {
    Entails,
    NotEntails,
}

impl BinaryLabel {
    pub fn as_str(&self) -> &'static str {
        match self {
            BinaryLabel::Entails => "entails",
            BinaryLabel::NotEntails => "not-entails",
        }
    }
}

impl fmt::Display for BinaryLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Gold annotation: binary for 2-class sets, three-way for 3-class sets.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GoldLabel {
    Binary(BinaryLabel),
    ThreeWay(EntailmentLabel),
}

impl GoldLabel {
    pub fn as_str(&self) -> &'static str {
        match self {
            GoldLabel::Binary(b) => b.as_str(),
            GoldLabel::ThreeWay(l) => l.as_str(),
        }
    }

    /// Does a predicted three-way label count as correct for this gold?
    pub fn matches(&self, predicted: EntailmentLabel) -> bool {
        match self {
            GoldLabel::Binary(b) => predicted.to_binary() == *b,
            GoldLabel::ThreeWay(l) => predicted == *l,
        }
    }

    /// The predicted label projected into this gold's label space, for
    /// confusion reporting.
    pub fn project(&self, predicted: EntailmentLabel) -> String {
        match self {
            GoldLabel::Binary(_) => predicted.to_binary().as_str().to_string(),
            GoldLabel::ThreeWay(_) => predicted.as_str().to_string(),
        }
    }
}

impl fmt::Display for GoldLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One premise/hypothesis item from a test set.
#[derive(Clone, Debug)]
pub struct SentencePair {
    pub id: String,
    pub premise: String,
    pub hypothesis: String,
    pub gold: GoldLabel,
    pub dataset: String,
    pub arity: u8,
}

impl SentencePair {
    /// Arity-2 pairs must carry binary gold; arity-3 pairs three-way gold.
    pub fn arity_consistent(&self) -> bool {
        match (self.arity, &self.gold) {
            (2, GoldLabel::Binary(_)) => true,
            (3, GoldLabel::ThreeWay(_)) => true,
            _ => false,
        }
    }
}

/// Which sentence a quantity came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Source {
    Premise,
    Hypothesis,
}

/// Direction of a quantity in a state of change.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Flux {
    IncreaseTo,
    IncreaseFrom,
    DecreaseTo,
    DecreaseFrom,
}

impl Flux {
    pub fn is_increase(&self) -> bool {
        matches!(self, Flux::IncreaseTo | Flux::IncreaseFrom)
    }
}

/// A contiguous run of tokens, with the resolved surface text.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TokenSpan {
    /// Token index range `[start, end)` into the sentence token list.
    pub start: usize,
    pub end: usize,
    pub text: String,
}

impl TokenSpan {
    pub fn single(index: usize, text: impl Into<String>) -> Self {
        TokenSpan { start: index, end: index + 1, text: text.into() }
    }
}

/// Byte range into the source sentence.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CharSpan {
    pub start: usize,
    pub end: usize,
}

/// Grounded quantity tuple extracted from one quantity mention.
#[derive(Clone, Debug)]
pub struct NumSet {
    pub val: Interval,
    pub unit: TokenSpan,
    pub ent: Option<TokenSpan>,
    pub adj: Option<TokenSpan>,
    pub loc: Vec<TokenSpan>,
    pub verb: Option<TokenSpan>,
    pub freq: Vec<TokenSpan>,
    pub flux: Option<Flux>,
    pub approximate: bool,
    /// Value came from a ratio construction ("half", "1 in 4"); eligible for
    /// x100 alignment against a percentage counterpart.
    pub ratio: bool,
    pub source: Source,
    pub mention: CharSpan,
}

impl NumSet {
    pub fn unit_text(&self) -> &str {
        &self.unit.text
    }
}

impl fmt::Display for NumSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.val, self.unit.text)?;
        if let Some(adj) = &self.adj {
            write!(f, " adj={}", adj.text)?;
        }
        if let Some(ent) = &self.ent {
            write!(f, " ent={}", ent.text)?;
        }
        if let Some(verb) = &self.verb {
            write!(f, " verb={}", verb.text)?;
        }
        for loc in &self.loc {
            write!(f, " loc={}", loc.text)?;
        }
        for freq in &self.freq {
            write!(f, " freq={}", freq.text)?;
        }
        if let Some(flux) = &self.flux {
            write!(f, " flux={:?}", flux)?;
        }
        if self.approximate {
            write!(f, " ~approx")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binary_collapse() {
        assert_eq!(EntailmentLabel::Entailment.to_binary(), BinaryLabel::Entails);
        assert_eq!(EntailmentLabel::Contradiction.to_binary(), BinaryLabel::NotEntails);
        assert_eq!(EntailmentLabel::Neutral.to_binary(), BinaryLabel::NotEntails);
    }

    #[test]
    fn gold_matching() {
        let gold = GoldLabel::Binary(BinaryLabel::NotEntails);
        assert!(gold.matches(EntailmentLabel::Neutral));
        assert!(gold.matches(EntailmentLabel::Contradiction));
        assert!(!gold.matches(EntailmentLabel::Entailment));
        let gold3 = GoldLabel::ThreeWay(EntailmentLabel::Contradiction);
        assert!(!gold3.matches(EntailmentLabel::Neutral));
        assert!(gold3.matches(EntailmentLabel::Contradiction));
    }

    #[test]
    fn arity_consistency() {
        let pair = SentencePair {
            id: "p0".into(),
            premise: "a".into(),
            hypothesis: "b".into(),
            gold: GoldLabel::Binary(BinaryLabel::Entails),
            dataset: "t".into(),
            arity: 2,
        };
        assert!(pair.arity_consistent());
        let mut bad = pair.clone();
        bad.arity = 3;
        assert!(!bad.arity_consistent());
    }
}

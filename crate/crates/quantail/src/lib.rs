//! Symbolic quantitative entailment over sentence pairs.
//!
//! Quantity mentions are segmented from premise and hypothesis, parsed into
//! grounded tuples, pruned to unit-compatible pairs, and composed into
//! constrained postfix equations; a global reasoner aggregates the evidence
//! into an entailment label. An evaluation harness loads test sets, scores
//! batches against majority baselines, and generates perturbation probes.

pub mod compose;
pub mod corpus;
pub mod harness;
pub mod interval;
pub mod lexicon;
pub mod numset;
pub mod parse;
pub mod prune;
pub mod reason;
pub mod segment;
pub mod text;
pub mod value;
pub mod words;

pub use interval::{ArithmeticError, Endpoint, Interval, IntervalError, SetOutcome};
pub use lexicon::{singularize, FluxDirection, LexiconSet};
pub use numset::{
    BinaryLabel, CharSpan, EntailmentLabel, Flux, GoldLabel, NumSet, SentencePair, Source,
    TokenSpan,
};
pub use segment::{normalize_number, segment, BoundMarker, NormalizeError, QuantityMention};
pub use value::Num;

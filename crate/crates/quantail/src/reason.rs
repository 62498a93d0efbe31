//! Global reasoner: aggregate per-hypothesis-quantity justification evidence
//! into a final entailment label.
//!
//! Every hypothesis quantity has to be justified for entailment (a necessary,
//! not sufficient, condition — only the necessity direction is asserted).
//! Contradiction fires when units are compatible, sentence context is
//! near-identical (Jaccard over non-quantity tokens >= theta), and a conflict
//! signal holds: opposed flux directions, antonymous adjectives, or disjoint
//! value intervals.

use std::collections::BTreeSet;

use crate::compose::justify;
use crate::lexicon::LexiconSet;
use crate::numset::{EntailmentLabel, NumSet, SentencePair, Source};
use crate::parse::parse_sentence;
use crate::prune::{align_ratio_percent, compatible, compatible_pairs};
use crate::text::{is_punctuation, tokenize};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SimilarityClass {
    Entail,
    Contradict,
    Neutral,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VerdictStatus {
    True,
    False,
    Contradiction,
}

#[derive(Clone, Debug)]
pub enum VerdictEvidence {
    /// Rendered justifying equation.
    Equation(String),
    /// Index of the premise NumSet whose value matched.
    Premise(usize),
}

/// Per-hypothesis-quantity outcome.
#[derive(Clone, Debug)]
pub struct QuantityVerdict {
    pub hyp_index: usize,
    pub status: VerdictStatus,
    pub evidence: Option<VerdictEvidence>,
}

/// Engine knobs; defaults follow the reference configuration.
#[derive(Clone, Copy, Debug)]
pub struct EngineParams {
    /// Context-similarity threshold for the contradiction branch.
    pub theta: f64,
    /// Maximum operator-nesting depth of the premise-side expression.
    pub max_depth: usize,
    /// Cap on enumerated equations per hypothesis quantity.
    pub max_solutions: usize,
}

impl Default for EngineParams {
    fn default() -> Self {
        EngineParams { theta: 0.6, max_depth: 3, max_solutions: 50 }
    }
}

/// True iff the premise value lies entirely within the hypothesis value
/// (point equality when both are degenerate). Handles ranges.
pub fn value_match(p: &NumSet, h: &NumSet) -> bool {
    p.val.is_subset_of(&h.val)
}

fn conflict_signal(p: &NumSet, h: &NumSet, lex: &LexiconSet) -> bool {
    if let (Some(pf), Some(hf)) = (&p.flux, &h.flux) {
        if pf.is_increase() != hf.is_increase() {
            return true;
        }
    }
    if let (Some(pa), Some(ha)) = (&p.adj, &h.adj) {
        if lex.antonymous(&pa.text, &ha.text) {
            return true;
        }
    }
    matches!(p.val.intersect(&h.val), crate::interval::SetOutcome::Empty)
}

/// Similarity class for a quantity pair given the sentence-level context
/// similarity: `e` under near-identical context with no conflict signal,
/// `c` under near-identical context with a conflict signal, `n` otherwise.
pub fn max_similarity_class(
    p: &NumSet,
    h: &NumSet,
    context_similarity: f64,
    theta: f64,
    lex: &LexiconSet,
) -> SimilarityClass {
    if !compatible(p, h, lex) {
        return SimilarityClass::Neutral;
    }
    if context_similarity >= theta {
        if conflict_signal(p, h, lex) {
            SimilarityClass::Contradict
        } else {
            SimilarityClass::Entail
        }
    } else {
        SimilarityClass::Neutral
    }
}

/// Jaccard similarity over the lowercased non-quantity tokens of the two
/// sentences (tokens inside quantity mentions, digits, and punctuation are
/// excluded).
pub fn context_similarity(
    premise: &str,
    premise_numsets: &[NumSet],
    hypothesis: &str,
    hypothesis_numsets: &[NumSet],
) -> f64 {
    let collect = |sentence: &str, numsets: &[NumSet]| -> BTreeSet<String> {
        tokenize(sentence)
            .into_iter()
            .filter(|t| {
                !is_punctuation(&t.text)
                    && !t.text.chars().any(|c| c.is_ascii_digit())
                    && !numsets
                        .iter()
                        .any(|ns| t.start >= ns.mention.start && t.end <= ns.mention.end)
            })
            .map(|t| t.lower())
            .collect()
    };
    let a = collect(premise, premise_numsets);
    let b = collect(hypothesis, hypothesis_numsets);
    let union = a.union(&b).count();
    if union == 0 {
        return 1.0;
    }
    let inter = a.intersection(&b).count();
    inter as f64 / union as f64
}

/// The label-aggregation algorithm over parsed quantities, compatible pairs,
/// and per-hypothesis justifying equations.
pub fn predict(
    premises: &[NumSet],
    hypotheses: &[NumSet],
    pairs: &[(usize, usize)],
    justified: &[Vec<String>],
    context_sim: f64,
    params: &EngineParams,
    lex: &LexiconSet,
) -> (EntailmentLabel, Vec<QuantityVerdict>) {
    if hypotheses.is_empty() || pairs.is_empty() {
        return (EntailmentLabel::Neutral, Vec::new());
    }

    let mut verdicts: Vec<QuantityVerdict> = Vec::with_capacity(hypotheses.len());
    for (h_idx, h) in hypotheses.iter().enumerate() {
        let partners: Vec<usize> = pairs
            .iter()
            .filter(|(_, hi)| *hi == h_idx)
            .map(|(pi, _)| *pi)
            .collect();
        if partners.is_empty() {
            return (EntailmentLabel::Neutral, Vec::new());
        }
        let mut status = VerdictStatus::False;
        let mut evidence = None;
        for &p_idx in &partners {
            let p = &premises[p_idx];
            match max_similarity_class(p, h, context_sim, params.theta, lex) {
                SimilarityClass::Entail => {
                    if value_match(p, h) {
                        status = VerdictStatus::True;
                        evidence = Some(VerdictEvidence::Premise(p_idx));
                    } else {
                        status = VerdictStatus::False;
                        evidence = None;
                    }
                }
                SimilarityClass::Contradict => {
                    status = VerdictStatus::Contradiction;
                    evidence = Some(VerdictEvidence::Premise(p_idx));
                }
                SimilarityClass::Neutral => {}
            }
        }
        if let Some(eq) = justified.get(h_idx).and_then(|eqs| eqs.first()) {
            status = VerdictStatus::True;
            evidence = Some(VerdictEvidence::Equation(eq.clone()));
        }
        verdicts.push(QuantityVerdict { hyp_index: h_idx, status, evidence });
    }

    if verdicts.iter().any(|v| v.status == VerdictStatus::Contradiction) {
        return (EntailmentLabel::Contradiction, verdicts);
    }
    if verdicts.iter().all(|v| v.status == VerdictStatus::True) {
        return (EntailmentLabel::Entailment, verdicts);
    }
    (EntailmentLabel::Neutral, verdicts)
}

/// Full classification record for one sentence pair.
#[derive(Clone, Debug)]
pub struct Classification {
    pub label: EntailmentLabel,
    pub premise_numsets: Vec<NumSet>,
    pub hypothesis_numsets: Vec<NumSet>,
    pub pairs: Vec<(usize, usize)>,
    /// (hypothesis index, rendered equation) for every justifying equation.
    pub equations: Vec<(usize, String)>,
    pub verdicts: Vec<QuantityVerdict>,
    pub context_similarity: f64,
    pub diagnostics: Vec<String>,
}

/// End-to-end pipeline: segment, parse, prune, compose, predict. Pairs with
/// no hypothesis quantities come out neutral; stage failures degrade to
/// neutral with a diagnostic.
pub fn classify_pair(pair: &SentencePair, lex: &LexiconSet, params: &EngineParams) -> Classification {
    let (mut premise_numsets, mut diagnostics) = parse_sentence(&pair.premise, lex, Source::Premise);
    let (mut hypothesis_numsets, hyp_diags) = parse_sentence(&pair.hypothesis, lex, Source::Hypothesis);
    diagnostics.extend(hyp_diags);

    align_ratio_percent(&mut premise_numsets, &mut hypothesis_numsets);

    if hypothesis_numsets.is_empty() {
        diagnostics.push("no hypothesis quantities; defaulting to neutral".to_string());
        return Classification {
            label: EntailmentLabel::Neutral,
            premise_numsets,
            hypothesis_numsets,
            pairs: Vec::new(),
            equations: Vec::new(),
            verdicts: Vec::new(),
            context_similarity: 0.0,
            diagnostics,
        };
    }

    let pairs = compatible_pairs(&premise_numsets, &hypothesis_numsets, lex);
    let context_sim = context_similarity(
        &pair.premise,
        &premise_numsets,
        &pair.hypothesis,
        &hypothesis_numsets,
    );

    let mut equations = Vec::new();
    let mut justified: Vec<Vec<String>> = vec![Vec::new(); hypothesis_numsets.len()];
    if !pairs.is_empty() {
        for (h_idx, h) in hypothesis_numsets.iter().enumerate() {
            let result = justify(h, &premise_numsets, lex, params.max_depth, params.max_solutions);
            for eq in &result.equations {
                let rendered = eq.render(&result.symbols);
                equations.push((h_idx, rendered.clone()));
                justified[h_idx].push(rendered);
            }
        }
    }

    let (label, verdicts) = predict(
        &premise_numsets,
        &hypothesis_numsets,
        &pairs,
        &justified,
        context_sim,
        params,
        lex,
    );

    Classification {
        label,
        premise_numsets,
        hypothesis_numsets,
        pairs,
        equations,
        verdicts,
        context_similarity: context_sim,
        diagnostics,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numset::{BinaryLabel, GoldLabel};
    use crate::value::num_from_i64 as num;
    use crate::Interval;

    fn lex() -> LexiconSet {
        LexiconSet::embedded()
    }

    fn pair(premise: &str, hypothesis: &str, arity: u8) -> SentencePair {
        let gold = if arity == 2 {
            GoldLabel::Binary(BinaryLabel::Entails)
        } else {
            GoldLabel::ThreeWay(EntailmentLabel::Entailment)
        };
        SentencePair {
            id: "t".into(),
            premise: premise.into(),
            hypothesis: hypothesis.into(),
            gold,
            dataset: "test".into(),
            arity,
        }
    }

    fn classify(premise: &str, hypothesis: &str) -> Classification {
        classify_pair(&pair(premise, hypothesis, 3), &lex(), &EngineParams::default())
    }

    #[test]
    fn value_match_cases() {
        let mk = |v, unit: &str| crate::prune::tests::numset(unit, v, Source::Premise);
        let exact = mk(Interval::point(num(7_000_000_000)), "$");
        let widened = mk(
            Interval::closed(
                num(7_000_000_000) * crate::value::parse_decimal("0.98").unwrap(),
                num(7_000_000_000) * crate::value::parse_decimal("1.02").unwrap(),
            )
            .unwrap(),
            "$",
        );
        assert!(value_match(&exact, &widened));
        assert!(!value_match(&widened, &exact));

        let p79 = mk(Interval::point(num(79)), "people");
        let h80 = mk(Interval::point(num(80)), "people");
        assert!(!value_match(&p79, &h80));

        let p100 = mk(Interval::point(num(100)), "men");
        let h_lt700 = mk(Interval::less_than(num(700)), "men");
        assert!(value_match(&p100, &h_lt700));
    }

    #[test]
    fn apples_entailment() {
        let c = classify("I had 3 apples but gave 1 apple to my brother.", "I have 2 apples.");
        assert_eq!(c.label, EntailmentLabel::Entailment);
        assert!(c.equations.iter().any(|(_, e)| e == "P1 P2 - H1 ="));
    }

    #[test]
    fn lambs_entailment() {
        let c = classify(
            "Each of farmer Cunningham's 6048 lambs is either black or white and there are 193 white ones.",
            "5855 of Farmer Cunningham's lambs are black.",
        );
        assert_eq!(c.label, EntailmentLabel::Entailment);
    }

    #[test]
    fn wrong_guess_is_not_entailed() {
        let c = classify(
            "Each of farmer Cunningham's 6048 lambs is either black or white and there are 193 white ones.",
            "5850 of Farmer Cunningham's lambs are black.",
        );
        assert_ne!(c.label, EntailmentLabel::Entailment);
    }

    #[test]
    fn missing_hypothesis_quantity_is_neutral() {
        let c = classify("The attack killed 4 people.", "The attack was terrible.");
        assert_eq!(c.label, EntailmentLabel::Neutral);
    }

    #[test]
    fn no_compatible_pairs_is_neutral() {
        let c = classify("The attack killed 4 soldiers.", "The fire destroyed 4 houses.");
        assert_eq!(c.label, EntailmentLabel::Neutral);
    }

    #[test]
    fn identity_pair_entails() {
        let c = classify("The warehouse stored 500 barrels.", "The warehouse stored 500 barrels.");
        assert_eq!(c.label, EntailmentLabel::Entailment);
    }

    #[test]
    fn perturbed_identity_contradicts() {
        let c = classify("The warehouse stored 500 barrels.", "The warehouse stored 501 barrels.");
        assert_eq!(c.label, EntailmentLabel::Contradiction);
    }

    #[test]
    fn stress_quantifier_pair() {
        let p = "NHAI employs 100 men to build a highway of 2 km in 50 days working 8 hours a day";
        let entailed = "NHAI employs less than 700 men to build a highway of 2 km in 50 days working 8 hours a day";
        let c = classify(p, entailed);
        assert_eq!(c.label, EntailmentLabel::Entailment);

        let contradicted = "NHAI employs more than 700 men to build a highway of 2 km in 50 days working 8 hours a day";
        let c = classify(p, contradicted);
        assert_eq!(c.label, EntailmentLabel::Contradiction);
    }

    #[test]
    fn low_context_overlap_gives_neutral_class() {
        let l = lex();
        let mk = |v, unit: &str| crate::prune::tests::numset(unit, v, Source::Premise);
        let p = mk(Interval::point(num(10)), "dogs");
        let h = mk(Interval::point(num(10)), "dogs");
        assert_eq!(max_similarity_class(&p, &h, 0.1, 0.6, &l), SimilarityClass::Neutral);
        assert_eq!(max_similarity_class(&p, &h, 0.9, 0.6, &l), SimilarityClass::Entail);
    }

    #[test]
    fn opposed_flux_conflicts() {
        let l = lex();
        let mk = |flux| {
            let mut ns = crate::prune::tests::numset("%", Interval::point(num(5)), Source::Premise);
            ns.flux = flux;
            ns
        };
        let p = mk(Some(crate::numset::Flux::IncreaseTo));
        let h = mk(Some(crate::numset::Flux::DecreaseTo));
        assert_eq!(max_similarity_class(&p, &h, 0.9, 0.6, &l), SimilarityClass::Contradict);
    }

    #[test]
    fn determinism() {
        let p = "Between 20 and 30 people were trapped in the casino.";
        let h = "Up to 30 people thought trapped in casino.";
        let a = classify(p, h);
        let b = classify(p, h);
        assert_eq!(a.label, b.label);
        assert_eq!(a.equations, b.equations);
    }

    #[test]
    fn range_containment_entails() {
        let c = classify(
            "Between 20 and 30 people were trapped in the casino.",
            "Up to 30 people were trapped in the casino.",
        );
        assert_eq!(c.label, EntailmentLabel::Entailment);
        assert!(c.equations.iter().any(|(_, e)| e.contains('⊆')));
    }
}

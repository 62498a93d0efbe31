//! Pruner: form unit-compatible premise-hypothesis NumSet pairs.
//!
//! Units match by (1) direct string match after lowercasing and
//! singularization, (2) one-hop synonymy/hypernymy in the unit-synonym
//! lexicon, or (3) one unit being a nationality/occupation while the other is
//! synonymous with person. Percent units only pair with ratio-valued
//! counterparts.

use crate::lexicon::{singularize, LexiconSet};
use crate::numset::NumSet;
use crate::value::num_from_i64;

fn is_percent_unit(u: &str) -> bool {
    u == "%" || u == "percent"
}

/// Unit-level compatibility; symmetric (ignores which side each unit is on).
pub fn compatible(p: &NumSet, h: &NumSet, lex: &LexiconSet) -> bool {
    let u1 = singularize(&p.unit.text.to_lowercase());
    let u2 = singularize(&h.unit.text.to_lowercase());

    // A percentage only pairs with another percentage or a ratio-flagged
    // counterpart (which alignment rescales by 100).
    let p1 = is_percent_unit(&u1);
    let p2 = is_percent_unit(&u2);
    if p1 != p2 {
        return (p1 && h.ratio) || (p2 && p.ratio);
    }

    if u1 == u2 {
        return true;
    }
    if lex.synonym_related(&u1, &u2) {
        return true;
    }
    (lex.is_person_type(&u1) && lex.is_person_word(&u2))
        || (lex.is_person_type(&u2) && lex.is_person_word(&u1))
}

/// Cartesian filter by `compatible`, ordered by (hypothesis index, premise
/// index). Pairs are `(premise_index, hypothesis_index)`.
pub fn compatible_pairs(
    premises: &[NumSet],
    hypotheses: &[NumSet],
    lex: &LexiconSet,
) -> Vec<(usize, usize)> {
    let mut pairs = Vec::new();
    for (h_idx, h) in hypotheses.iter().enumerate() {
        for (p_idx, p) in premises.iter().enumerate() {
            if compatible(p, h, lex) {
                pairs.push((p_idx, h_idx));
            }
        }
    }
    pairs
}

/// Partition NumSets into unit-compatibility classes (union-find closure of
/// pairwise compatibility); the class index is the composer's type index.
pub fn unit_classes(numsets: &[&NumSet], lex: &LexiconSet) -> Vec<usize> {
    let n = numsets.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut Vec<usize>, i: usize) -> usize {
        if parent[i] != i {
            let root = find(parent, parent[i]);
            parent[i] = root;
        }
        parent[i]
    }
    for i in 0..n {
        for j in (i + 1)..n {
            if compatible(numsets[i], numsets[j], lex) {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                if a != b {
                    parent[b] = a;
                }
            }
        }
    }
    // Densify roots into 0..k class indices, stable by first appearance.
    let mut class_of_root = std::collections::HashMap::new();
    let mut classes = Vec::with_capacity(n);
    for i in 0..n {
        let root = find(&mut parent, i);
        let next = class_of_root.len();
        let class = *class_of_root.entry(root).or_insert(next);
        classes.push(class);
    }
    classes
}

/// Rescale ratio-flagged NumSets by 100 when the other side carries a
/// percentage unit ("half" vs "50%"), so value comparisons share a scale.
/// Applied once, just before pruning.
pub fn align_ratio_percent(premises: &mut [NumSet], hypotheses: &mut [NumSet]) {
    let has_percent = |sets: &[NumSet]| {
        sets.iter().any(|ns| is_percent_unit(&singularize(&ns.unit.text.to_lowercase())))
    };
    let premise_percent = has_percent(premises);
    let hypothesis_percent = has_percent(hypotheses);
    let hundred = crate::interval::Interval::point(num_from_i64(100));
    let scale = |sets: &mut [NumSet]| {
        for ns in sets.iter_mut() {
            if ns.ratio && !is_percent_unit(&singularize(&ns.unit.text.to_lowercase())) {
                if let Ok(scaled) = scale_interval(&ns.val, &hundred) {
                    ns.val = scaled;
                    ns.unit.text = "%".to_string();
                }
            }
        }
    };
    if premise_percent {
        scale(hypotheses);
    }
    if hypothesis_percent {
        scale(premises);
    }
}

fn scale_interval(
    iv: &crate::interval::Interval,
    by: &crate::interval::Interval,
) -> Result<crate::interval::Interval, crate::interval::ArithmeticError> {
    use crate::interval::{Endpoint, Interval};
    if iv.is_degenerate() {
        return iv.mul(by);
    }
    let factor = by.point_value().expect("scale factor is a point");
    let scale_ep = |e: &Endpoint| match e {
        Endpoint::Finite(v) => Endpoint::Finite(v * factor),
        other => other.clone(),
    };
    Interval::new(scale_ep(iv.lo()), scale_ep(iv.hi()), iv.lo_open(), iv.hi_open())
        .map_err(|_| crate::interval::ArithmeticError::NonPointOperand)
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::numset::{CharSpan, Source, TokenSpan};
    use crate::value::num_from_i64 as num;
    use crate::Interval;

    pub(crate) fn numset(unit: &str, val: Interval, source: Source) -> NumSet {
        NumSet {
            val,
            unit: TokenSpan::single(0, unit),
            ent: None,
            adj: None,
            loc: Vec::new(),
            verb: None,
            freq: Vec::new(),
            flux: None,
            approximate: false,
            ratio: false,
            source,
            mention: CharSpan { start: 0, end: 0 },
        }
    }

    fn lex() -> LexiconSet {
        LexiconSet::embedded()
    }

    #[test]
    fn direct_and_singularized_match() {
        let l = lex();
        let p = numset("soldiers", Interval::point(num(7)), Source::Premise);
        let h = numset("soldiers", Interval::point(num(7)), Source::Hypothesis);
        assert!(compatible(&p, &h, &l));
        let h2 = numset("Soldier", Interval::point(num(7)), Source::Hypothesis);
        assert!(compatible(&p, &h2, &l));
    }

    #[test]
    fn different_units_incompatible() {
        let l = lex();
        let p = numset("soldiers", Interval::point(num(7)), Source::Premise);
        let h = numset("policemen", Interval::point(num(4)), Source::Hypothesis);
        assert!(!compatible(&p, &h, &l));
    }

    #[test]
    fn nationality_person_rule() {
        let l = lex();
        let p = numset("Iraqis", Interval::point(num(10)), Source::Premise);
        let h = numset("people", Interval::point(num(10)), Source::Hypothesis);
        assert!(compatible(&p, &h, &l));
        assert!(compatible(&h, &p, &l));
    }

    #[test]
    fn percent_needs_ratio_counterpart() {
        let l = lex();
        let p = numset("%", Interval::point(num(50)), Source::Premise);
        let h = numset("men", Interval::point(num(50)), Source::Hypothesis);
        assert!(!compatible(&p, &h, &l));
        let mut ratio_h = numset("wealth", Interval::point(crate::value::parse_decimal("0.5").unwrap()), Source::Hypothesis);
        ratio_h.ratio = true;
        assert!(compatible(&p, &ratio_h, &l));
    }

    #[test]
    fn pair_ordering() {
        let l = lex();
        let p1 = numset("soldiers", Interval::point(num(7)), Source::Premise);
        let p2 = numset("policemen", Interval::point(num(4)), Source::Premise);
        let h1 = numset("soldiers", Interval::point(num(7)), Source::Hypothesis);
        let pairs = compatible_pairs(&[p1.clone(), p2], &[h1], &l);
        assert_eq!(pairs, vec![(0, 0)]);
        let empty = compatible_pairs(&[], &[p1], &l);
        assert!(empty.is_empty());
    }

    #[test]
    fn both_premises_pair() {
        let l = lex();
        let p1 = numset("apples", Interval::point(num(3)), Source::Premise);
        let p2 = numset("apples", Interval::point(num(1)), Source::Premise);
        let h = numset("apples", Interval::point(num(2)), Source::Hypothesis);
        let pairs = compatible_pairs(&[p1, p2], &[h], &l);
        assert_eq!(pairs, vec![(0, 0), (1, 0)]);
    }

    #[test]
    fn synonym_monotonicity() {
        let mut l = lex();
        let p = numset("automobiles", Interval::point(num(3)), Source::Premise);
        let h = numset("rides", Interval::point(num(3)), Source::Hypothesis);
        let before = compatible(&p, &h, &l);
        assert!(!before);
        // Adding an entry only adds pairs, never removes existing ones.
        let p2 = numset("cars", Interval::point(num(3)), Source::Premise);
        let h2 = numset("vehicles", Interval::point(num(3)), Source::Hypothesis);
        assert!(compatible(&p2, &h2, &l));
        l.add_unit_synonym("ride", "automobile");
        assert!(compatible(&p, &h, &l));
        assert!(compatible(&p2, &h2, &l));
    }

    #[test]
    fn unit_class_partition() {
        let l = lex();
        let a = numset("apples", Interval::point(num(3)), Source::Premise);
        let b = numset("apple", Interval::point(num(1)), Source::Premise);
        let c = numset("days", Interval::point(num(5)), Source::Premise);
        let h = numset("apples", Interval::point(num(2)), Source::Hypothesis);
        let classes = unit_classes(&[&a, &b, &c, &h], &l);
        assert_eq!(classes[0], classes[1]);
        assert_eq!(classes[0], classes[3]);
        assert_ne!(classes[0], classes[2]);
    }

    #[test]
    fn ratio_alignment_scales_to_percent() {
        let l = lex();
        let premises = vec![numset("%", Interval::point(num(25)), Source::Premise)];
        let mut hyps = vec![{
            let mut ns = numset(
                "Londoners",
                Interval::point(crate::value::parse_decimal("0.25").unwrap()),
                Source::Hypothesis,
            );
            ns.ratio = true;
            ns
        }];
        let mut prem = premises.clone();
        align_ratio_percent(&mut prem, &mut hyps);
        assert_eq!(hyps[0].unit.text, "%");
        assert_eq!(hyps[0].val, Interval::point(num(25)));
        assert!(compatible(&prem[0], &hyps[0], &l));
    }
}

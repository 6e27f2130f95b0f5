//! Statistical checks on the random instance model. Bounds are five sigma,
//! so failures mean a broken generator, not an unlucky seed.

use evoscape_maxsat::InstanceSpec;

const SPEC: InstanceSpec = InstanceSpec {
    num_vars: 20,
    num_clauses: 2000,
    literals_per_clause: 3,
    seed: 20260819,
};

#[test]
fn polarity_is_a_fair_coin() {
    let formula = SPEC.generate().unwrap();
    let total = 3 * SPEC.num_clauses;
    let positives: usize = formula
        .clauses()
        .iter()
        .flatten()
        .filter(|l| l.is_positive())
        .count();
    let sigma = (total as f64).sqrt() / 2.0;
    let drift = (positives as f64 - total as f64 / 2.0).abs();
    assert!(
        drift <= 5.0 * sigma,
        "positive literals {positives} of {total}, drift {drift:.1} > 5 sigma {:.1}",
        5.0 * sigma
    );
}

#[test]
fn variable_usage_is_roughly_uniform() {
    let formula = SPEC.generate().unwrap();
    let total = (3 * SPEC.num_clauses) as f64;
    let mut counts = [0usize; SPEC.num_vars + 1];
    for literal in formula.clauses().iter().flatten() {
        counts[literal.var() as usize] += 1;
    }
    let p = 1.0 / SPEC.num_vars as f64;
    let mean = total * p;
    // Within-clause draws are without replacement, which only tightens the
    // binomial sigma used here.
    let sigma = (total * p * (1.0 - p)).sqrt();
    for (var, &count) in counts.iter().enumerate().skip(1) {
        let drift = (count as f64 - mean).abs();
        assert!(
            drift <= 5.0 * sigma,
            "variable {var} used {count} times, expected near {mean:.0}"
        );
    }
}

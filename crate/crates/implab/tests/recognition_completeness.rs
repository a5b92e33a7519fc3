//! Interval recognition against the model-existence oracle, with both
//! certificates checked, over every connected graph up to order seven.

use implab::enumeration::connected_graphs;
use implab::impropriety::interval_model_exists;
use implab::recognition::is_interval;

#[test]
fn recognition_agrees_with_model_existence_up_to_seven() {
    let mut interval_count = 0;
    let mut total = 0;
    for n in 1..=7 {
        for g in connected_graphs(n).unwrap() {
            let decision = is_interval(&g);
            let exists = interval_model_exists(&g);
            assert_eq!(
                decision.is_interval(),
                exists,
                "disagreement on {}",
                serde_json::to_string(&g).unwrap()
            );
            match (decision.ordering(), decision.witness()) {
                (Some(ordering), None) => {
                    ordering.verify(&g).unwrap();
                    interval_count += 1;
                }
                (None, Some(witness)) => witness.verify(&g).unwrap(),
                _ => panic!("decision must carry exactly one certificate"),
            }
            total += 1;
        }
    }
    assert_eq!(total, 1 + 1 + 2 + 6 + 21 + 112 + 853);
    assert_eq!(interval_count, 1 + 1 + 2 + 5 + 15 + 56 + 250);
}

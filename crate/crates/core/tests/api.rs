use fsgraph::coxeter::{complete_walk, reduce_anchored, replay, AnchoredWalk, Classification, LabeledWalk};
use fsgraph::cyclespace::{enumerate_squares, spans};
use fsgraph::fs::{fs_component_of, star_components_predicted, StarPrediction};
use fsgraph::theorems::spider_vs_complement_fruit;
use fsgraph::{fs_components, make_family, FamilySpec, Graph, Permutation};

fn g(spec: &str) -> Graph {
    make_family(&spec.parse::<FamilySpec>().unwrap()).unwrap()
}

#[test]
fn theta_star_census_matches_prediction() {
    let y = g("theta0");
    assert_eq!(star_components_predicted(&y).unwrap(), StarPrediction::ThetaSix);
    let c = fs_components(&g("star:7"), &y).unwrap();
    assert_eq!(c.count, 6);
    assert_eq!(c.size_multiset(), vec![840; 6]);
}

#[test]
fn fruit_exception_has_twelve_components() {
    assert!(!spider_vs_complement_fruit(&[2, 2, 2]).unwrap());
    let c = fs_components(&g("spider:2,2,2"), &g("co(fruit:7)")).unwrap();
    assert_eq!(c.count, 12);
    let json = serde_json::to_value(&c).unwrap();
    assert_eq!(json["reps"][0], serde_json::json!([1, 2, 3, 4, 5, 6, 7]));
}

#[test]
fn squares_span_a_dandelion_component() {
    let c = fs_component_of(&g("cycle:8"), &g("dand:3,8"), &Permutation::identity(8)).unwrap();
    assert!(spans(&enumerate_squares(&c), &c).unwrap());
}

#[test]
fn reduction_round_trip() {
    let y = g("co(cycle:6)");
    let w = complete_walk(&y, 0, 3, &[2, 4]).unwrap();
    let r = reduce_anchored(&w, &y).unwrap();
    assert_eq!(r.classification, Classification::Complete);
    assert_eq!(replay(&y, &w.walk, &r.log).unwrap(), r.full);

    let start = Permutation::parse_one_line("1,2,3,4,5").unwrap();
    let labels = ["12", "12"].iter().map(|s| s.parse().unwrap()).collect();
    let trivial = AnchoredWalk::new(LabeledWalk { start, labels }).unwrap();
    let r = reduce_anchored(&trivial, &g("cycle:5")).unwrap();
    assert_eq!(r.classification, Classification::Trivial);
    assert!(r.log.moves.is_empty());
}

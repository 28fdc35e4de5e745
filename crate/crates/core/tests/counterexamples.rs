use linres::betti::{hochster_oracle, is_linear_resolution, koszul_betti, powers_linear_report, BettiOptions};
use linres::ideal::ideal_power;
use linres::io::NamedIdeal;
use linres::{FieldSpec, MonomialIdeal};

const Q: FieldSpec = FieldSpec::Rationals;
const GF2: FieldSpec = FieldSpec::PrimeField(2);

fn load(gens: &[&str]) -> MonomialIdeal {
    let json = serde_json::json!({
        "variables": ["a", "b", "c", "d", "e", "f"],
        "generators": gens,
    });
    NamedIdeal::from_json(&json.to_string()).unwrap().ideal
}

fn terai() -> MonomialIdeal {
    load(&["abd", "abf", "ace", "adc", "aef", "bde", "bcf", "bce", "cdf", "def"])
}

fn sturmfels() -> MonomialIdeal {
    load(&["def", "cef", "cdf", "cde", "bef", "bcd", "acf", "ade"])
}

#[test]
fn terai_depends_on_the_characteristic() {
    let i = terai();
    assert_eq!(i.len(), 10);
    assert!(is_linear_resolution(&i, Q).unwrap());
    assert!(!is_linear_resolution(&i, GF2).unwrap());
    let q = koszul_betti(&i, Q, &BettiOptions::default()).unwrap();
    let two = koszul_betti(&i, GF2, &BettiOptions::default()).unwrap();
    assert_eq!(q.regularity().unwrap(), 3);
    assert_eq!(two.regularity().unwrap(), 4);
    assert!(hochster_oracle(&i, Q).unwrap().same_numbers(&q));
    assert!(hochster_oracle(&i, GF2).unwrap().same_numbers(&two));
}

#[test]
fn terai_square_is_not_linear() {
    let sq = ideal_power(&terai(), 2).unwrap();
    assert!(!is_linear_resolution(&sq, Q).unwrap());
}

#[test]
fn sturmfels_linear_but_square_is_not() {
    let i = sturmfels();
    for field in FieldSpec::default_pair() {
        assert!(is_linear_resolution(&i, field).unwrap());
        let t = koszul_betti(&i, field, &BettiOptions::default()).unwrap();
        assert!(hochster_oracle(&i, field).unwrap().same_numbers(&t));
        let report = powers_linear_report(&i, field, 2, &BettiOptions::default()).unwrap();
        assert!(report[0].linear);
        assert!(!report[1].linear);
        assert_eq!(report[1].generators, 36);
    }
}

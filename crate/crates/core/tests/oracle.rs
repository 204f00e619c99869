use std::sync::Arc;

use krawtchouk::oracle::{char_eigenvalue, Ambient, CodeSpec, ElementData, LinearCode};
use krawtchouk::scheme::xi_vector;
use krawtchouk::{c_poly, SchemeParams, SchemeSpec, WeightDistribution};
use num_rational::BigRational;

fn full_space(spec: SchemeSpec) -> LinearCode {
    let p = SchemeParams::new(spec).unwrap();
    LinearCode::full(Arc::new(Ambient::new(&p).unwrap()))
}

#[test]
fn full_space_distribution_is_xi() {
    let mut specs: Vec<SchemeSpec> = Vec::new();
    for q in [2, 3] {
        specs.extend((1..=8).map(|n| SchemeSpec::hamming(q, n)));
    }
    specs.extend([
        SchemeSpec::bilinear(2, 2, 2),
        SchemeSpec::bilinear(2, 3, 2),
        SchemeSpec::gabidulin(2, 2, 2),
        SchemeSpec::skew(2, 4),
        SchemeSpec::hermitian(2, 2),
        SchemeSpec::hermitian(2, 3),
    ]);
    for spec in specs {
        let code = full_space(spec);
        let xi = WeightDistribution::new(xi_vector(code.params()).unwrap());
        assert_eq!(code.weight_distribution().unwrap(), xi, "{spec}");
    }
}

#[test]
fn odd_characteristic_spaces_match_xi() {
    for spec in [SchemeSpec::skew(3, 4), SchemeSpec::hermitian(3, 2), SchemeSpec::bilinear(3, 2, 2), SchemeSpec::gabidulin(3, 2, 2)] {
        let code = full_space(spec);
        let xi = WeightDistribution::new(xi_vector(code.params()).unwrap());
        assert_eq!(code.weight_distribution().unwrap(), xi, "{spec}");
    }
}

#[test]
fn character_sums_match_c_poly() {
    for spec in [SchemeSpec::hamming(4, 2), SchemeSpec::skew(2, 5), SchemeSpec::gabidulin(2, 3, 2)] {
        let p = SchemeParams::new(spec).unwrap();
        for k in 0..=p.n() {
            for x in 0..=p.n() {
                let v = BigRational::from_integer(char_eigenvalue(&p, k, x).unwrap());
                assert_eq!(v, c_poly(k, x, &p).unwrap(), "{spec} k={k} x={x}");
            }
        }
    }
}

#[test]
fn code_spec_from_json() {
    let json = r#"{"scheme": {"kind": "hermitian", "q": 2, "t": 2}, "generators": [[[1, 2], [3, 0]], [[0, 0], [0, 1]]]}"#;
    let spec: CodeSpec = serde_json::from_str(json).unwrap();
    let code = spec.build().unwrap();
    assert_eq!(code.dimension(), 2);
    assert_eq!(code.weight_distribution().unwrap().total(), 4.into());
    let data: Vec<ElementData> = code.generator_elements().iter().map(|e| e.data()).collect();
    assert_eq!(data, spec.generators);

    let wrong_shape = r#"{"scheme": {"kind": "hamming", "q": 2, "n": 3}, "generators": [[[1, 0, 1]]]}"#;
    let spec: CodeSpec = serde_json::from_str(wrong_shape).unwrap();
    assert!(spec.build().is_err());
}

#[test]
fn odd_characteristic_duals_match_transform() {
    use krawtchouk::verify::{moments_suite, sample_code_pairs, transform_suite};
    for (i, spec) in [SchemeSpec::skew(3, 4), SchemeSpec::hermitian(3, 2), SchemeSpec::bilinear(3, 2, 2), SchemeSpec::gabidulin(3, 2, 2)]
        .into_iter()
        .enumerate()
    {
        let p = SchemeParams::new(spec).unwrap();
        let pairs = sample_code_pairs(&p, 10, i as u64).unwrap();
        let t = transform_suite(&pairs);
        assert!(t.passed, "{spec}: {:?}", t.failures);
        let m = moments_suite(&p, &pairs);
        assert!(m.passed, "{spec}: {:?}", m.failures);
    }
}

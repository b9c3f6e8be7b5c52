mod common;

#[test]
fn complement_preserves_lengths() {
    common::complement_invariance(512).unwrap();
}

#[test]
fn concatenation_is_additive() {
    common::concatenation_additivity(512).unwrap();
}

#[test]
fn constructions_post_verify() {
    common::constructions_verify(96).unwrap();
}

#[test]
fn oracle_outputs_respect_hop_bound() {
    common::hop_bound_on_oracle(256).unwrap();
}

#[test]
fn double_transformation_is_closed() {
    common::equivalence_closure(512).unwrap();
}

#[test]
fn admissibility_is_scale_invariant() {
    common::admissibility_scaling(512).unwrap();
}

#[test]
fn substitution_keeps_endpoints() {
    common::substitution_endpoints(256).unwrap();
}

#[test]
fn dispatcher_rejects_exactly_inadmissible() {
    common::dispatcher_soundness(256).unwrap();
}

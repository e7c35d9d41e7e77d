use lorenz_knots::braids::*;
use lorenz_knots::invariants::{alexander_burau, fingerprint, kauffman_oracle};
use lorenz_knots::orbits::*;

fn word(s: &str) -> OrbitWord {
    s.parse().unwrap()
}

fn twisted_templates(range: std::ops::RangeInclusive<i64>) -> Vec<TemplateSpec> {
    let mut out = Vec::new();
    for m in range.clone() {
        for n in range.clone() {
            out.push(TemplateSpec::new(m, n));
        }
    }
    out
}

#[test]
fn permutation_examples() {
    let perm = |s: &str| {
        let p = lorenz_permutation(&word(s), TemplateSpec::LORENZ);
        (0..p.len()).map(|i| p.apply(i) + 1).collect::<Vec<_>>()
    };
    assert_eq!(perm("xy"), [2, 1]);
    // 1->3, 2->1, 3->2
    assert_eq!(perm("xyy"), [3, 1, 2]);
    assert_eq!(perm("xyyy"), [4, 1, 2, 3]);
}

#[test]
fn lorenz_braids_are_positive() {
    for w in enumerate_orbits(12) {
        let b = build_braid(&w, TemplateSpec::LORENZ).unwrap();
        assert!(b.is_positive(), "{w}: {b}");
    }
}

#[test]
fn closures_are_knots() {
    let words = enumerate_orbits(12);
    for spec in twisted_templates(-4..=4) {
        for w in &words {
            let b = build_braid(w, spec).unwrap();
            assert_eq!(b.component_count(), 1);
            assert_eq!(b.strands(), w.len());
        }
    }
}

#[test]
fn exponent_sum_counts_merge_and_twist_crossings() {
    let words = enumerate_orbits(9);
    for spec in twisted_templates(-4..=4) {
        for mirrored in [false, true] {
            let spec = TemplateSpec { mirrored, ..spec };
            for w in &words {
                let b = build_braid(w, spec).unwrap();
                let (p, q) = (w.p() as i64, w.q() as i64);
                let twists = spec.m * p * (p - 1) / 2 + spec.n * q * (q - 1) / 2;
                let expected = merge_crossings(w, spec) as i64 + twists;
                assert_eq!(b.exponent_sum(), if mirrored { -expected } else { expected }, "{w} on {spec}");
                let merge = b.gens().len() as i64 - (spec.m.abs() * p * (p - 1) / 2 + spec.n.abs() * q * (q - 1) / 2);
                assert_eq!(merge, merge_crossings(w, spec) as i64);
                // With even twists the merge layer is the Lorenz permutation itself.
                if spec.m % 2 == 0 && spec.n % 2 == 0 {
                    assert_eq!(merge_crossings(w, spec), lorenz_permutation(w, spec).inversions());
                }
            }
        }
    }
}

#[test]
fn builder_examples() {
    let b = build_braid(&word("xy"), TemplateSpec::LORENZ).unwrap();
    assert_eq!(b.to_string(), "2: 1");
    let b = build_braid(&word("x"), TemplateSpec::new(2, 0)).unwrap();
    assert_eq!(b, BraidWord::trivial(1));
    let b = build_braid(&word("xyyy"), TemplateSpec::new(0, -2)).unwrap();
    assert_eq!(b.gens().iter().filter(|g| g.positive).count(), 3);
    assert_eq!(b.gens().iter().filter(|g| !g.positive).count(), 6);
    assert_eq!(b.exponent_sum(), -3);
}

#[test]
fn half_twists() {
    assert!(half_twist_block(1, 5).gens().is_empty());
    assert_eq!(half_twist_block(2, 1).to_string(), "2: 1");
    let b = half_twist_block(3, -2);
    assert_eq!(b.crossing_count(), 6);
    assert!(b.is_negative());
    assert_eq!(b.permutation(), Permutation::identity(3));
    let rev = half_twist_block(4, 1).permutation();
    assert_eq!((0..4).map(|i| rev.apply(i)).collect::<Vec<_>>(), [3, 2, 1, 0]);
}

#[test]
fn mirrored_template_mirrors_the_braid() {
    for spec in twisted_templates(-2..=2) {
        for w in enumerate_orbits(7) {
            let b = build_braid(&w, spec).unwrap();
            assert_eq!(build_braid(&w, spec.mirror()).unwrap(), mirror_braid(&b));
        }
    }
    assert_eq!(mirror_braid(&BraidWord::trivial(3)), BraidWord::trivial(3));
}

#[test]
fn simplification_preserves_alexander() {
    let words = enumerate_orbits(9);
    for spec in twisted_templates(-4..=4) {
        for w in &words {
            let b = build_braid(w, spec).unwrap();
            let s = simplify_braid(&b);
            assert!(s.crossing_count() <= b.crossing_count() && s.strands() <= b.strands());
            let (a, c) = (alexander_burau(&b).unwrap(), alexander_burau(&s).unwrap());
            assert_eq!(a, c, "{w} on {spec}");
            assert_eq!(a.eval_at_neg_one().magnitude(), c.eval_at_neg_one().magnitude());
        }
    }
}

#[test]
fn simplification_examples() {
    let b = build_braid(&word("xyyy"), TemplateSpec::LORENZ).unwrap();
    let s = simplify_braid(&b);
    assert!(s.strands() <= 1);
    assert!(kauffman_oracle(&b).unwrap().is_one());
    assert!(kauffman_oracle(&s).unwrap().is_one());
}

#[test]
fn letter_swap_symmetry() {
    for spec in twisted_templates(-2..=2) {
        for w in enumerate_orbits(8) {
            let a = fingerprint(&w, spec, 12).unwrap();
            let b = fingerprint(&w.swap_xy(), spec.swapped(), 12).unwrap();
            assert_eq!(a, b, "{w} on {spec}");
        }
    }
}

#[test]
fn connected_sum_braid() {
    let t = BraidWord::from_signed(2, &[1, 1, 1]).unwrap();
    let sq = BraidWord::connected_sum(&t, &mirror_braid(&t));
    assert!(sq.is_knot());
    assert_eq!(sq.to_string(), "4: 1 1 1 -3 -3 -3 2");
}

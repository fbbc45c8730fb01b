use std::collections::HashMap;

use dimdraw::context::{parse_cxt, FormalContext};
use dimdraw::dimension::{
    linear_extension_from_ferrers, order_dimension, verify_realizer, LinearExtension, Realizer,
};
use dimdraw::embedding::{embed, positions};
use dimdraw::lattice::{concepts, ConceptLattice};
use dimdraw::projection::{best_assignment, default_frame, project};

fn life() -> FormalContext {
    parse_cxt(include_str!("../fixtures/life_in_water.cxt")).unwrap()
}

/// Letter → concept index, and the extensions as letter sequences.
fn published(
    ctx: &FormalContext,
    lattice: &ConceptLattice,
) -> (HashMap<char, usize>, Vec<Vec<char>>) {
    let mut letters = HashMap::new();
    let mut orders = Vec::new();
    for line in include_str!("../fixtures/life_in_water_realizer.txt").lines() {
        let mut parts = line.split_whitespace();
        match parts.next() {
            Some("concept") => {
                let letter = parts.next().unwrap().chars().next().unwrap();
                let intent: Vec<String> = parts.next().unwrap().chars().map(String::from).collect();
                let idx = (0..lattice.len())
                    .find(|&c| {
                        let names: Vec<String> = lattice
                            .concept(c)
                            .intent
                            .iter()
                            .map(|m| ctx.attributes()[m].clone())
                            .collect();
                        names == intent
                    })
                    .unwrap();
                letters.insert(letter, idx);
            }
            Some("extension") => orders.push(parts.map(|s| s.chars().next().unwrap()).collect()),
            _ => {}
        }
    }
    (letters, orders)
}

fn published_realizer() -> (ConceptLattice, HashMap<char, usize>, Realizer) {
    let ctx = life();
    let lat = concepts(&ctx).unwrap();
    let (letters, orders) = published(&ctx, &lat);
    let r = Realizer {
        extensions: orders
            .iter()
            .map(|o| LinearExtension::from_order(o.iter().map(|c| letters[c]).collect()).unwrap())
            .collect(),
    };
    (lat, letters, r)
}

#[test]
fn published_extensions_form_a_realizer() {
    let (lat, letters, r) = published_realizer();
    assert_eq!(letters.len(), 19);
    assert!(r.extensions.iter().all(|e| e.extends(&lat)));
    assert!(verify_realizer(&lat, &r));
}

#[test]
fn positions_in_first_extension() {
    let (_, letters, r) = published_realizer();
    let pos = positions(&r.extensions[0]);
    assert_eq!(pos[letters[&'S']], 0);
    assert_eq!(pos[letters[&'A']], 18);
    assert_eq!(pos[letters[&'E']], 15);
}

#[test]
fn embedding_examples() {
    let (lat, letters, r) = published_realizer();
    let e = embed(&lat, &r).unwrap();
    assert_eq!(e.coords(letters[&'E']), &[15, 16, 7]);
    assert_eq!(e.coords(letters[&'S']), &[0, 0, 0]);
    assert_eq!(e.coords(letters[&'A']), &[18, 18, 18]);
    // printed as (15,16,7), a duplicate of E; recomputed from the extensions
    assert_eq!(e.coords(letters[&'D']), &[17, 11, 12]);
}

#[test]
fn s3_inside_life_in_water() {
    // {L, I, K} below {D, C, E} except along the matching L-D, I-C, K-E
    let (lat, letters, _) = published_realizer();
    let ix = |c: char| letters[&c];
    let lower = [ix('L'), ix('I'), ix('K')];
    let upper = [ix('D'), ix('C'), ix('E')];
    for (i, &a) in lower.iter().enumerate() {
        for (j, &b) in upper.iter().enumerate() {
            assert_eq!(lat.leq(a, b), i != j, "{i} {j}");
        }
    }
    for w in [lower, upper] {
        for &a in &w {
            for &b in &w {
                assert!(a == b || !lat.leq(a, b));
            }
        }
    }
}

#[test]
fn computed_extension_for_each_part() {
    let ctx = life();
    let lat = concepts(&ctx).unwrap();
    let dim = order_dimension(&ctx).unwrap();
    for part in &dim.cover.parts {
        let ext = linear_extension_from_ferrers(&ctx, part, &lat).unwrap();
        assert!(ext.extends(&lat));
        assert_eq!(ext.position(lat.bottom()), 0);
        assert_eq!(ext.position(lat.top()), 18);
    }
}

#[test]
fn best_assignment_beats_identity() {
    let (lat, _, r) = published_realizer();
    let e = embed(&lat, &r).unwrap();
    let frame = default_frame(3, 45.0).unwrap();
    let identity = project(&e, lat.covers(), &frame, &[0, 1, 2]).unwrap();
    let best = best_assignment(&e, lat.covers(), &frame, 8).unwrap();
    assert!(best.crossings <= identity.crossings);
}

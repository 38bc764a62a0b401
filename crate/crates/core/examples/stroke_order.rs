//! Direction normalization and writing-order sorting of a small expression.
//!
//! Usage: cargo run --example stroke_order
//!
//! The strokes of "a/b + c" are given scrambled and drawn in odd directions.

use strokex::ordering::{group_tree, normalize_direction, order_strokes, GroupTree, OrderParams};
use strokex::{Point, Stroke};

fn line(from: (i32, i32), to: (i32, i32)) -> Stroke {
    let n = (to.0 - from.0).abs().max((to.1 - from.1).abs()).max(1);
    let pts = (0..=n)
        .map(|i| Point::new(from.0 + (to.0 - from.0) * i / n, from.1 + (to.1 - from.1) * i / n))
        .collect();
    Stroke::new(pts).expect("non-empty")
}

fn show(tree: &GroupTree, depth: usize) {
    let pad = "  ".repeat(depth + 1);
    match tree {
        GroupTree::Leaf(ids) => println!("{pad}group {ids:?}"),
        GroupTree::Split { axis, children } => {
            println!("{pad}cut along {axis:?}");
            for c in children {
                show(c, depth + 1);
            }
        }
    }
}

fn main() {
    let named = [
        ("plus vertical", line((140, 60), (140, 20))),
        ("denominator b", line((40, 70), (40, 100))),
        ("c", line((190, 50), (180, 30))),
        ("fraction bar", line((70, 50), (10, 50))),
        ("numerator a", line((40, 30), (30, 0))),
        ("plus horizontal", line((160, 40), (120, 40))),
    ];
    let strokes: Vec<Stroke> = named.iter().map(|(_, s)| s.clone()).collect();
    let params = OrderParams::default();
    let avg_width = 3.0;

    println!("grouping:");
    show(&group_tree(&strokes, avg_width, &params), 0);

    println!("writing order:");
    for (i, s) in order_strokes(&strokes, avg_width, &params).iter().enumerate() {
        let name = named
            .iter()
            .find(|(_, t)| normalize_direction(t) == *s)
            .map_or("?", |(n, _)| n);
        println!("  {i}: {name:<16} {:?} -> {:?}", s.start(), s.end());
    }
}

//! Enumerate an orbit, check every element and write it as DOT.

use toda_weyl::orbit::{
    enumerate_with, export_graph, gamma_n_test, ones, EnumerateOptions, GraphFormat,
};
use toda_weyl::AlgebraSpec;

fn main() -> toda_weyl::Result<()> {
    let spec = AlgebraSpec::affine_ct(2)?;
    let nodes = enumerate_with(
        spec,
        4,
        EnumerateOptions {
            workers: 2,
            prune_repeats: true,
        },
    );
    let mut per_level = vec![0usize; 5];
    for node in &nodes {
        per_level[node.level] += 1;
        assert!(gamma_n_test(&node.vector)?.passes());
    }
    println!("{spec}: {} elements, per level {per_level:?}", nodes.len());
    for node in nodes.iter().take(6) {
        println!("  {:<12} {}", node.witness.to_string(), node.vector);
    }
    let dot = export_graph(&nodes[..6], GraphFormat::Dot, Some(&ones(spec)))?;
    print!("{}", String::from_utf8_lossy(&dot));
    Ok(())
}

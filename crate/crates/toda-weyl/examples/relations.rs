//! Check the defining relations of both affine Weyl groups on the generic
//! vector and print the Cartan matrices they come from.

use toda_weyl::weyl::presentation_relations;
use toda_weyl::{AlgebraSpec, CartanMatrix};

fn main() -> toda_weyl::Result<()> {
    for spec in [AlgebraSpec::affine_a(3)?, AlgebraSpec::affine_ct(3)?] {
        println!("{spec}");
        println!("{}", CartanMatrix::affine(spec.family, spec.n)?);
        for r in presentation_relations(spec) {
            println!("  {} {r}", if r.holds(spec) { "PASS" } else { "FAIL" });
        }
    }
    Ok(())
}

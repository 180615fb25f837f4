//! Chain words for consecutive and wrap-around sets, compared with their
//! closed forms on the generic vector.

use toda_weyl::chains::{chain_word, closed_form};
use toda_weyl::weyl::apply_word;
use toda_weyl::{AlgebraSpec, ConsecutiveSet, MassVector};

fn main() -> toda_weyl::Result<()> {
    let a4 = AlgebraSpec::affine_a(4)?;
    let ct3 = AlgebraSpec::affine_ct(3)?;
    let cases = [
        (a4, ConsecutiveSet::new(2, 2, a4.size())?),
        (a4, ConsecutiveSet::wrap(4, 1, a4.size())?),
        (ct3, ConsecutiveSet::new(1, 1, ct3.size())?),
        (ct3, ConsecutiveSet::new(3, 1, ct3.size())?),
    ];
    for (spec, set) in cases {
        let g = MassVector::generic(spec);
        let plan = chain_word(&set, spec)?;
        let target = closed_form(&g, &set)?;
        let same = apply_word(&plan.word, &g)? == target;
        println!("{spec} J={set}");
        println!("  word ({} letters): {}", plan.word.len(), plan.word);
        println!("  closed form: {target}");
        println!("  matches: {same}");
    }
    Ok(())
}

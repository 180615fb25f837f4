//! One blow-up step per decomposition case, starting from zero.

use toda_weyl::chains::{blowup_step, Decomposition};
use toda_weyl::weyl::pohozaev_residual;
use toda_weyl::{AlgebraSpec, ConsecutiveSet, MassVector};

fn main() -> toda_weyl::Result<()> {
    let a4 = AlgebraSpec::affine_a(4)?;
    let c5 = AlgebraSpec::affine_ct(5)?;
    let set = |spec: AlgebraSpec, j, l| ConsecutiveSet::new(j, l, spec.size());
    let cases = vec![
        (a4, vec![set(a4, 1, 1)?, set(a4, 4, 0)?]),
        (a4, vec![ConsecutiveSet::wrap(4, 1, a4.size())?]),
        (c5, vec![set(c5, 1, 2)?]),
        (c5, vec![set(c5, 3, 3)?]),
        (c5, vec![set(c5, 1, 1)?, set(c5, 5, 1)?]),
        (c5, vec![set(c5, 3, 1)?]),
    ];
    for (spec, blocks) in cases {
        match Decomposition::classify(spec, blocks) {
            Ok(d) => {
                let (word, v) = blowup_step(&MassVector::zero(spec), &d)?;
                println!("{d}");
                println!("  word {word}");
                println!("  mass {v}  residual {}", pohozaev_residual(&v)?);
            }
            Err(e) => println!("rejected: {e}"),
        }
    }
    // overlapping blocks are not a decomposition
    let bad = Decomposition::classify(a4, vec![set(a4, 1, 1)?, set(a4, 2, 1)?]);
    println!("overlap: {}", bad.unwrap_err());
    Ok(())
}

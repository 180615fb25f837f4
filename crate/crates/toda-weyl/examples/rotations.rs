//! Cyclic rotations of the type A diagram and the relabelled words that
//! realise them under rotated weights.

use toda_weyl::permutations::{
    check_rotation_covariance, rotate_vector, rotation_covariance, CyclicRotation,
};
use toda_weyl::weyl::apply_word;
use toda_weyl::{AlgebraSpec, MassVector, Word};

fn main() -> toda_weyl::Result<()> {
    let spec = AlgebraSpec::affine_a(3)?;
    let w = Word::new(vec![2, 1, 3]);
    let v = apply_word(&w, &MassVector::zero(spec))?;
    println!("{w} applied to 0 = {v}");
    for r in 1..=spec.size() {
        let rot = CyclicRotation::new(r, spec.size())?;
        println!(
            "r={r}: rotated {}  word {}  covariant {}",
            rotate_vector(&v, &rot)?,
            rotation_covariance(&w, &rot),
            check_rotation_covariance(&w, &rot, spec)?
        );
    }
    Ok(())
}

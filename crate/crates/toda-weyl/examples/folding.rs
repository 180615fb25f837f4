//! Fold C^t vectors into type A and compare the two Pohozaev residuals.

use toda_weyl::permutations::{
    fold_ct_to_a, folded_generator_word, folded_weights, unfold_a_to_ct,
};
use toda_weyl::weyl::{
    apply_generator, apply_word, apply_word_weighted, pohozaev_residual, pohozaev_residual_weighted,
};
use toda_weyl::{AlgebraSpec, MassVector, Word};

fn main() -> toda_weyl::Result<()> {
    let ct = AlgebraSpec::affine_ct(3)?;
    let weights = folded_weights(ct);
    let v = apply_word(&Word::new(vec![2, 1, 3, 4]), &MassVector::zero(ct))?;
    let folded = fold_ct_to_a(&v)?;
    println!("C^t vector  {v}");
    println!("folded      {folded}");
    println!("unfolds back: {}", unfold_a_to_ct(&folded)? == v);
    println!(
        "residuals: folded {}, C^t {}",
        pohozaev_residual_weighted(&folded, &weights)?,
        pohozaev_residual(&v)?
    );

    let g = MassVector::generic(ct);
    for i in ct.indices() {
        let word = folded_generator_word(i, ct.n);
        let lhs = fold_ct_to_a(&apply_generator(i, &g)?)?;
        let rhs = apply_word_weighted(&word, &fold_ct_to_a(&g)?, &weights)?;
        println!("R{i} folds to {word}: {}", lhs == rhs);
    }
    Ok(())
}

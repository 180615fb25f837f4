//! Membership certificates by descent, including two vectors that fail.

use toda_weyl::algebra::rat;
use toda_weyl::orbit::{descend_to_zero, DEFAULT_MAX_STEPS};
use toda_weyl::weyl::apply_word;
use toda_weyl::{AlgebraSpec, LinForm, MassVector, Word};

fn main() -> toda_weyl::Result<()> {
    let spec = AlgebraSpec::affine_a(3)?;
    let v = apply_word(&Word::new(vec![1, 3, 2, 4, 1]), &MassVector::zero(spec))?;
    println!("v = {v}");
    println!("  {}", descend_to_zero(&v, DEFAULT_MAX_STEPS));

    let mut shifted = v.clone();
    shifted.set(2, shifted.get(2) + &LinForm::mu(2));
    println!("v + mu2 e2 = {shifted}");
    println!("  {}", descend_to_zero(&shifted, DEFAULT_MAX_STEPS));

    let mut constant = v.clone();
    constant.set(1, v.get(1) + &LinForm::constant_form(rat(1)));
    println!("v + e1 = {constant}");
    println!("  {}", descend_to_zero(&constant, DEFAULT_MAX_STEPS));
    Ok(())
}

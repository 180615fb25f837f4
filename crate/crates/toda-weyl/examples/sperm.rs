//! Palindromic permutations and the masses they attach to a C^t head set.

use toda_weyl::permutations::{mapped_generator, sc_simple, sigma_f_ct, SPermC};
use toda_weyl::weyl::apply_generator;
use toda_weyl::{AlgebraSpec, ConsecutiveSet, MassVector};

fn main() -> toda_weyl::Result<()> {
    let l = 2;
    for i in 0..=l {
        println!("f_{i} = {}", sc_simple(i, l)?);
    }
    let f = SPermC::from_word(l, &[0, 1, 2, 1])?;
    println!(
        "f_0 f_1 f_2 f_1 = {f} (constraint holds: {})",
        f.satisfies_constraint()
    );

    let spec = AlgebraSpec::affine_ct(4)?;
    let head = ConsecutiveSet::new(1, l, spec.size())?;
    let zero = MassVector::zero(spec);
    let sf = sigma_f_ct(&zero, &f, &head)?;
    println!("sigma_f on {head} from 0: {sf}");
    for i in 0..=l {
        let k = mapped_generator(spec, &head, i)?;
        let next = sigma_f_ct(&zero, &f.compose(&sc_simple(i, l)?)?, &head)?;
        println!(
            "  f o f_{i} matches R{k} sigma_f: {}",
            next == apply_generator(k, &sf)?
        );
    }
    Ok(())
}

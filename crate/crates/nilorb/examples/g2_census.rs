//! Sweep the nilpotent cone of g2* over F_3 and print one line per orbit.

use nilorb::chevalley::coadjoint::dual_index;
use nilorb::chevalley::{nilpotent_sweep, ChevalleyAlgebra, Group};

fn main() -> nilorb::Result<()> {
    let alg = ChevalleyAlgebra::build(Group::G2)?;
    let census = nilpotent_sweep(&alg, 3, 1 << 24)?;
    for o in &census.orbits {
        let terms: Vec<String> = (0..alg.rs.n_pos)
            .filter(|&b| o.seed[dual_index(&alg, b)] != 0)
            .map(|b| format!("{}*e'_{}", o.seed[dual_index(&alg, b)], alg.rs.name(b)))
            .collect();
        let seed = if terms.is_empty() { "0".to_string() } else { terms.join(" + ") };
        println!("{:>7}  {seed}", o.size);
    }
    println!("{} states", census.total);
    Ok(())
}

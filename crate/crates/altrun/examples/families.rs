//! Every polynomial family at small orders, by its default route.
//!
//! ```text
//! cargo run --example families
//! ```

use altrun::families::{default_method, family, ALL_FAMILIES};

fn main() {
    for fam in ALL_FAMILIES {
        println!("family {fam}");
        for n in 0..=6 {
            let method = default_method(fam, n);
            match family(fam, n, &method) {
                Ok(value) => println!("  n = {n}: {value}"),
                // Indices below the family's first defined order.
                Err(_) => continue,
            }
        }
        println!();
    }
}

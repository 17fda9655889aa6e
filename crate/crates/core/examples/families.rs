//! Family members and the closed-form witnesses for two of them.

use bcbp::analysis::{heart_witness, pell_members, sharp_witness, FamilyTag};

fn main() -> bcbp::Result<()> {
    for tag in FamilyTag::ALL {
        let members = pell_members(tag, 2_000);
        let shown: Vec<_> = members.iter().take(8).collect();
        println!("{} {:<8} {:>4} members <= 2000, first {shown:?}", tag.glyph(), tag.name(), members.len());
    }
    for k in 1..=4 {
        println!("6k+2, k = {k}: {}", heart_witness(k)?);
    }
    for k in 2..=4 {
        println!("4k^2-3, k = {k}: {}", sharp_witness(k)?);
    }
    Ok(())
}

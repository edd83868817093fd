use cuspidal::families::{self, FamilyTag};
use cuspidal::field::PrimeField;
use cuspidal::oracle;
use cuspidal::singular::find_singular_points;
use std::time::Instant;

fn main() {
    let f = PrimeField::new(10007).unwrap();
    let (inst, _) = families::quartic_six_cusps(&f, 1).unwrap();
    println!("quartic rejections:");
    for r in &inst.rejections {
        println!("  {r}");
    }

    // oracle cross-checks over F_101
    let f101 = PrimeField::new(101).unwrap();
    for tag in FamilyTag::all() {
        let t = Instant::now();
        match families::construct(tag, &f101, 1) {
            Ok((inst, report)) => {
                let scheme = find_singular_points(&inst.phi, inst.seed).unwrap();
                let ok = oracle::cross_check(&inst.phi, &scheme, 101).unwrap();
                println!(
                    "{}: verify PASS={} cross_check={} rational={} of {} in {:?} (attempts {})",
                    tag.as_str(),
                    report.pass(),
                    ok,
                    scheme.points.iter().filter(|p| p.is_rational()).count(),
                    scheme.count(),
                    t.elapsed(),
                    inst.attempts,
                );
            }
            Err(e) => println!("{}: ERROR {e} in {:?}", tag.as_str(), t.elapsed()),
        }
    }
}

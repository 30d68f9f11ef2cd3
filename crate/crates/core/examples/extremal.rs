//! Minimum genus and maximum order, closed form next to catalog search.

use bordered_actions::extremal::{
    max_order_closed, max_order_search, min_genus_closed, min_genus_search, MaxOrderVariant, MinGenusVariant,
};

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    for n in [2u64, 7, 9, 12, 15] {
        for v in MinGenusVariant::ALL {
            let Ok(a) = min_genus_closed(n, v) else {
                println!("N = {n:>2} {v:<3}: undefined");
                continue;
            };
            assert_eq!(a, min_genus_search(n, v)?);
            println!("N = {n:>2} {v:<3}: {:>2}, {} class(es)", a.value, a.class_count());
        }
    }
    for p in [2u64, 3, 4, 5] {
        let a = max_order_closed(p, MaxOrderVariant::Any)?;
        assert_eq!(a, max_order_search(p, MaxOrderVariant::Any)?);
        let via: Vec<String> = a.realizers.iter().map(|r| r.quotient.signature().to_string()).collect();
        println!("p = {p}: N = {} via {}", a.value, via.join(", "));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}

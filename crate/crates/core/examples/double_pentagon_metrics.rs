//! Triangle edges, the cubic for cos a, and the resulting arc lengths of
//! the double pentagon for n = 3, 4, 5.
//!
//! ```bash
//! cargo run --example double_pentagon_metrics
//! ```

use std::f64::consts::PI;

use sphere_pentagons::geom::{solve_double_pentagon, three_arc_cos, triangle_edges};

fn main() -> sphere_pentagons::Result<()> {
    for n in 3..=5u32 {
        let (x, y, z) = triangle_edges(n)?;
        let s = solve_double_pentagon(n)?;
        println!("n = {n}, f = {}", s.f);
        println!("  triangle: cos x = {:.6}, cos y = {:.6}, cos z = {:.6}", x.cos(), y.cos(), z.cos());
        println!("  a = {:.6}π, b = {:.6}π, c = {:.6}π", s.a / PI, s.b / PI, s.c / PI);
        match s.cos_a_closed_form {
            Some(c) => println!("  cos a = {c:.15} by radicals, {:.15} by bisection", s.cos_a_bisection),
            None => println!("  cos a = {:.15} by bisection", s.cos_a_bisection),
        }
        let back = three_arc_cos(s.a, s.delta, s.epsilon);
        println!("  three a-arcs at δ, ε close up to cos x within {:.1e}", (back - x.cos()).abs());
    }
    Ok(())
}

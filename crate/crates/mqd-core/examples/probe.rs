//! Scratch exploration binary (removed before finalizing).
use mqd_core::control::{run_controlled_evolution, steady_target, AppliedField};
use mqd_core::schemes::*;
use mqd_core::{ControlField, ControllerDiagnostics, QuantumState as QS, Real, SchemeModel as SM, TimeGrid as Grid, Trajectory};

fn max_step_increase(v: &[Real]) -> Real {
    v.windows(2).map(|w| w[1] - w[0]).fold(f64::MIN, f64::max)
}
fn report(tag: &str, traj: &Trajectory, diag: &ControllerDiagnostics) {
    let tp = traj.target_population.as_ref().unwrap();
    println!(
        "{tag}: final pop={:.6} max dV+={:.3e} passage(0.9)={:?} switches={}",
        tp.last().unwrap(),
        max_step_increase(&diag.lyapunov),
        traj.first_passage(0.9).map(|t| (t * 1000.0).round() / 1000.0),
        diag.sign_switches,
    );
}
fn bang(m: &SM, f: Real, bell: &QS) -> ControlField {
    ControlField::bang_bang(f, None, steady_target(&m.h0, bell).unwrap()).unwrap()
}
fn lyap(m: &SM, b: Real, bell: &QS) -> ControlField {
    ControlField::lyapunov(b, steady_target(&m.h0, bell).unwrap()).unwrap()
}

fn main() {
    let p = SchemeParams::<Real>::teleportation(20.0, 5.0);
    let m = build_teleportation(&p).unwrap();
    let psi0 = m.ket("|0001>").unwrap();
    let bell = m.target().clone();

    for dt in [0.01, 0.02, 0.05, 0.1] {
        let fields = [AppliedField::new(bang(&m, 5.0, &bell), vec![0, 1])];
        let grid = Grid { t_start: 0.0, t_end: 30.0, dt };
        let (traj, diag) = run_controlled_evolution(&m, &fields, &psi0, &grid, None).unwrap();
        report(&format!("fig3ef F=5 dt={dt}"), &traj, &diag);
    }
    // continuous B=200 passage detail + population milestones
    {
        let fields = [AppliedField::new(lyap(&m, 200.0, &bell), vec![0, 1])];
        let grid = Grid { t_start: 0.0, t_end: 30.0, dt: 0.01 };
        let (traj, diag) = run_controlled_evolution(&m, &fields, &psi0, &grid, None).unwrap();
        report("fig3ab B=200", &traj, &diag);
        for thr in [0.1, 0.3, 0.5, 0.7, 0.8, 0.9] {
            println!("   B=200 passage({thr}) = {:?}", traj.first_passage(thr));
        }
        let fmax = traj.fields.iter().map(|r| r[0].abs()).fold(0.0, f64::max);
        println!("   B=200 max |f| = {fmax:.2}");
    }
    {
        let fields = [AppliedField::new(bang(&m, 5.0, &bell), vec![0, 1])];
        let grid = Grid { t_start: 0.0, t_end: 30.0, dt: 0.01 };
        let (traj, _) = run_controlled_evolution(&m, &fields, &psi0, &grid, None).unwrap();
        for thr in [0.1, 0.3, 0.5, 0.7, 0.8, 0.9] {
            println!("   F=5 passage({thr}) = {:?}", traj.first_passage(thr));
        }
    }
}

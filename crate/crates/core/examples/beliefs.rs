//! Posterior beliefs of both consumer types after every signal.

use splab::{BeliefProfile, ConsumerType, ModelParams, Signal};

fn main() -> splab::Result<()> {
    for mu0 in [0.5, 0.7] {
        let params = ModelParams::new(0.8, 0.5, 0.1)?.with_mu0(mu0)?;
        let beliefs = BeliefProfile::new(&params);
        println!("prior {mu0}");
        for s in Signal::ALL {
            println!(
                "  {s}  sophisticated {:.4}  naive {:.4}",
                beliefs.posterior(ConsumerType::Sophisticated, s),
                beliefs.posterior(ConsumerType::Naive, s),
            );
        }
    }
    Ok(())
}

"""Train a toy watermark model, then watermark, attack and identify one image.

Runs in about ten minutes on a CPU.  Everything is small (64x64 images, 16 bits),
so the numbers are illustrative only.
"""
import tempfile

from latentmark import attacks as atk
from latentmark.autoencoder import AutoencoderConfig, reconstruct
from latentmark.core import bit_accuracy, random_message
from latentmark.harness.config import ExperimentConfig
from latentmark.harness.experiments import Workspace
from latentmark.metrics import ssim
from latentmark.pipeline import detect, identify, inject
from latentmark.training import TrainConfig

cfg = ExperimentConfig(
    synthetic_count=400,
    ae=AutoencoderConfig(image_size=(64, 64), downsample_factor=4, base_width=16, epochs=10, batch_size=16),
    train=TrainConfig(n=16, lr_msg_pre=1e-3, lr_msg_formal=1e-4,
                      lr_couple_formal=1e-4, max_steps_step1=30000, max_steps_step2=3000,
                      max_steps_step3=6000, log_every=100),
)

with tempfile.TemporaryDirectory() as root:
    ws = Workspace(cfg, root=root)
    arm = ws.main_bundle()
    print(f"training finished: {arm.status}")

    image = ws.dataset.split("eval")[:1]
    msg = random_message(16, seed=7)
    marked = inject(image, msg, arm.bundle, ws.ae)
    print(f"SSIM to the plain reconstruction: {ssim(marked[0], reconstruct(image, ws.ae)[0]):.3f}")

    for spec in (atk.AttackSpec("gaussian_noise", {"sigma": 0.0}), atk.AttackSpec("jpeg", {"quality": 90}),
                 atk.AttackSpec("brightness", {"factor": 0.5}), atk.AttackSpec("gaussian_noise", {"sigma": 0.1})):
        attacked = atk.apply_attack(marked, spec)
        found, _ = detect(attacked[0], arm.bundle, ws.ae)
        print(f"{spec.name:28s} BitACC {bit_accuracy(found, msg):.3f}  "
              f"identified {identify(attacked[0], msg, arm.bundle, ws.ae)}")

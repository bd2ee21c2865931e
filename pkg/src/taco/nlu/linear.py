"""One-vs-rest logistic regression trained by plain gradient descent.

Kept deliberately small: the loss and gradient are exposed so tests can
check the analytic gradient against finite differences, and training stops
on a relative-loss-change tolerance.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy import sparse


def sigmoid(z: np.ndarray) -> np.ndarray:
    out = np.empty_like(z)
    pos = z >= 0
    out[pos] = 1.0 / (1.0 + np.exp(-z[pos]))
    ez = np.exp(z[~pos])
    out[~pos] = ez / (1.0 + ez)
    return out


def loss_and_grad(
    weights: np.ndarray,
    X: sparse.csr_matrix,
    Y: np.ndarray,
    l2: float = 0.0,
) -> tuple[float, np.ndarray]:
    """Mean binary cross-entropy over all samples and heads, plus L2 penalty.

    weights: (n_features, n_heads); Y: (n_samples, n_heads) in {0, 1}.
    """
    n = X.shape[0]
    Z = X @ weights
    # log(1 + exp(z)) - y*z, computed stably
    loss = float(np.sum(np.logaddexp(0.0, Z) - Y * Z) / (n * Y.shape[1]))
    loss += 0.5 * l2 * float(np.sum(weights * weights))
    grad = (X.T @ (sigmoid(Z) - Y)) / (n * Y.shape[1]) + l2 * weights
    return loss, np.asarray(grad)


@dataclass
class LogisticModel:
    """Per-head weight vectors over a shared feature space."""

    heads: list[str]
    weights: np.ndarray  # (n_features, n_heads)
    train_loss: float = 0.0
    epochs_run: int = 0
    l2: float = 0.0

    def scores(self, X: sparse.csr_matrix) -> np.ndarray:
        return sigmoid(np.asarray(X @ self.weights))

    def to_dict(self) -> dict:
        return {
            "heads": list(self.heads),
            "weights": self.weights.T.tolist(),
            "train_loss": self.train_loss,
            "epochs_run": self.epochs_run,
            "l2": self.l2,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "LogisticModel":
        return cls(
            heads=list(d["heads"]),
            weights=np.asarray(d["weights"], dtype=np.float64).T,
            train_loss=d.get("train_loss", 0.0),
            epochs_run=d.get("epochs_run", 0),
            l2=d.get("l2", 0.0),
        )


@dataclass
class GdConfig:
    learning_rate: float = 2.0
    max_epochs: int = 500
    rel_tol: float = 1e-6
    l2: float = 0.0
    history: list[float] = field(default_factory=list)


def fit_logistic(
    X: sparse.csr_matrix,
    Y: np.ndarray,
    heads: list[str],
    config: GdConfig | None = None,
) -> LogisticModel:
    """Full-batch gradient descent until the relative loss change drops
    below ``rel_tol`` or ``max_epochs`` is reached."""
    config = config or GdConfig()
    weights = np.zeros((X.shape[1], Y.shape[1]), dtype=np.float64)
    prev = None
    loss = 0.0
    epoch = 0
    lr = config.learning_rate
    for epoch in range(1, config.max_epochs + 1):
        loss, grad = loss_and_grad(weights, X, Y, config.l2)
        config.history.append(loss)
        if prev is not None:
            if loss > prev:  # overshoot: halve the step and retry from here
                lr *= 0.5
            elif abs(prev - loss) <= config.rel_tol * max(abs(prev), 1e-12):
                break
        prev = loss
        weights -= lr * grad
    return LogisticModel(heads=heads, weights=weights, train_loss=loss,
                         epochs_run=epoch, l2=config.l2)

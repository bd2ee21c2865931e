"""Seeded training-data simulator: fills per-intent utterance templates with
sampled slot values, composes mixed-intent utterances with connectives, and
injects filler-word noise."""
from __future__ import annotations

import json
import random
import re
from dataclasses import dataclass, field
from pathlib import Path

from ..errors import SpecError

PLACEHOLDER_RE = re.compile(r"\{([a-z_]+)\}")

CONNECTIVES = (", ", " and ", ". ")
NOISE_PROBABILITY = 0.1


@dataclass(frozen=True)
class SimulatorSpec:
    """Per-intent utterance templates plus slot vocabularies and noise."""

    templates: dict[str, tuple[str, ...]]
    slot_values: dict[str, tuple[str, ...]]
    noise_tokens: tuple[str, ...] = ()
    mix_prefixes: tuple[str, ...] = ("sentiment:negate", "sentiment:affirm")
    mix_suffixes: tuple[str, ...] = ("task_request",)
    mix_probability: float = 0.25

    def __post_init__(self):
        for key, templates in self.templates.items():
            for template in templates:
                for slot in PLACEHOLDER_RE.findall(template):
                    if slot not in self.slot_values:
                        raise SpecError(f"{key}: template slot {{{slot}}} has no values")

    @classmethod
    def load(cls, path: str | Path) -> "SimulatorSpec":
        doc = json.loads(Path(path).read_text())
        mix = doc.get("mix") or {}
        return cls(
            templates={k: tuple(v) for k, v in doc["templates"].items()},
            slot_values={k: tuple(v) for k, v in doc.get("slot_values", {}).items()},
            noise_tokens=tuple(doc.get("noise_tokens") or ()),
            mix_prefixes=tuple(mix.get("prefixes", ("sentiment:negate", "sentiment:affirm"))),
            mix_suffixes=tuple(mix.get("suffixes", ("task_request",))),
            mix_probability=mix.get("probability", 0.25),
        )

    def save(self, path: str | Path) -> None:
        doc = {
            "templates": {k: list(v) for k, v in self.templates.items()},
            "slot_values": {k: list(v) for k, v in self.slot_values.items()},
            "noise_tokens": list(self.noise_tokens),
            "mix": {
                "prefixes": list(self.mix_prefixes),
                "suffixes": list(self.mix_suffixes),
                "probability": self.mix_probability,
            },
        }
        Path(path).write_text(json.dumps(doc, indent=1))


def _fill(template: str, spec: SimulatorSpec, rng: random.Random) -> str:
    def substitute(match: re.Match) -> str:
        slot = match.group(1)
        values = spec.slot_values.get(slot)
        if not values:
            raise SpecError(f"unresolvable placeholder {{{slot}}}")
        return rng.choice(values)

    return PLACEHOLDER_RE.sub(substitute, template)


def _sample_single(spec: SimulatorSpec, keys: list[str], rng: random.Random) -> tuple[str, str]:
    key = rng.choice(keys)
    template = rng.choice(spec.templates[key])
    return _fill(template, spec, rng), key


def simulate_training_data(
    spec: SimulatorSpec, count: int, seed: int
) -> list[tuple[str, frozenset[str]]]:
    """Generate ``count`` labeled utterances, deterministically for a seed."""
    if count <= 0:
        raise SpecError("count must be positive")
    rng = random.Random(seed)
    keys = sorted(spec.templates)
    prefixes = [k for k in spec.mix_prefixes if k in spec.templates]
    suffixes = [k for k in spec.mix_suffixes if k in spec.templates]
    samples: list[tuple[str, frozenset[str]]] = []
    for _ in range(count):
        mix = prefixes and suffixes and rng.random() < spec.mix_probability
        if mix:
            prefix_key = rng.choice(prefixes)
            suffix_key = rng.choice(suffixes)
            first = _fill(rng.choice(spec.templates[prefix_key]), spec, rng)
            second = _fill(rng.choice(spec.templates[suffix_key]), spec, rng)
            connective = rng.choice(CONNECTIVES)
            utterance = first.rstrip(".!?") + connective + second
            labels = frozenset({prefix_key, suffix_key})
        else:
            utterance, key = _sample_single(spec, keys, rng)
            labels = frozenset({key})
        if spec.noise_tokens and rng.random() < NOISE_PROBABILITY:
            words = utterance.split()
            position = rng.randrange(len(words) + 1)
            words.insert(position, rng.choice(spec.noise_tokens))
            utterance = " ".join(words)
        samples.append((utterance, labels))
    return samples


def split_templates(
    spec: SimulatorSpec, holdout_fraction: float = 0.25, seed: int = 13
) -> tuple[SimulatorSpec, SimulatorSpec]:
    """Split every intent's templates into disjoint train and held-out specs."""
    rng = random.Random(seed)
    train: dict[str, tuple[str, ...]] = {}
    held: dict[str, tuple[str, ...]] = {}
    for key in sorted(spec.templates):
        templates = list(spec.templates[key])
        rng.shuffle(templates)
        n_held = int(len(templates) * holdout_fraction)
        if len(templates) - n_held < 1:
            n_held = max(0, len(templates) - 1)
        if n_held:
            held[key] = tuple(templates[:n_held])
        train[key] = tuple(templates[n_held:])
    make = lambda t: SimulatorSpec(  # noqa: E731
        templates=t,
        slot_values=spec.slot_values,
        noise_tokens=spec.noise_tokens,
        mix_prefixes=spec.mix_prefixes,
        mix_suffixes=spec.mix_suffixes,
        mix_probability=spec.mix_probability,
    )
    return make(train), make(held)

import json

import pytest

from taco.engine import Engine, Resources, data_root
from taco.ingest import load_corpus
from taco.search import build_index


@pytest.fixture(scope="session")
def resources():
    return Resources.load()


@pytest.fixture(scope="session")
def corpus(resources):
    return resources.corpus


@pytest.fixture(scope="session")
def index(resources):
    return resources.index


@pytest.fixture()
def engine(resources):
    return Engine(resources, seed=7, clock=lambda: 1_000_000.0, hour_fn=lambda: 9)


@pytest.fixture(scope="session")
def eval_dir():
    return data_root() / "eval"


def run_script(engine, utterances, session_id=None):
    """Drive the engine through a list of utterances; returns the responses."""
    from taco.model import utterance_input

    session_id = session_id or engine.create_session()
    return session_id, [engine.handle_turn(session_id, utterance_input(u)) for u in utterances]

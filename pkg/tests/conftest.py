import pytest

from ybw.cli import corpus_dir
from ybw.construct import build_couple
from ybw.io import params_from_json, read_json_file

CORPUS_PARAM_FILES = (
    "z2_half_half.params.json",
    "s3_std.params.json",
    "s3_triv_std.params.json",
    "z3_eps_mix.params.json",
    "q8_2dim.params.json",
)


@pytest.fixture(scope="session")
def corpus_params():
    out = {}
    for name in CORPUS_PARAM_FILES:
        path = corpus_dir() / name
        out[name] = params_from_json(read_json_file(path), name)
    return out


@pytest.fixture(scope="session")
def corpus_couples(corpus_params):
    """Built and certified couples for every corpus parameter set."""
    out = {}
    for name, params in corpus_params.items():
        couple, layout = build_couple(params)
        out[name] = (params, couple, layout)
    return out

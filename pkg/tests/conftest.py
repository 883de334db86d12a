"""Shared fixtures: the atlas and claim machinery are expensive to build,
so one session-scoped context serves every test that needs them."""
import pytest

from czdglab.claims import ClaimContext, run_claims


@pytest.fixture(scope="session")
def ctx() -> ClaimContext:
    return ClaimContext()


@pytest.fixture(scope="session")
def atlas(ctx):
    return ctx.atlas()


@pytest.fixture(scope="session")
def claim_results(ctx):
    return run_claims(context=ctx)

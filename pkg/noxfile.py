import nox
from nox.sessions import Session


@nox.session(python=["3.10", "3.11", "3.12"])
def test(session: Session):
    """Run the full test suite on python versions 3.10, 3.11, and 3.12."""
    session.install("-e", ".[dev]")
    session.run("pytest", "ultramonad/tests")


@nox.session(python="3.12")
def laws(session: Session):
    """Run the law reports from the command line, the way a user would."""
    session.install("-e", ".")
    for kind in ("maxmin", "maxplus"):
        session.run("ultramonad", "laws", "--kind", kind, "--trials", "200", "--seed", "7")
    session.run("ultramonad", "witness-noniso")


@nox.session(python="3.12")
def coverage(session: Session):
    """Run a coverage test on python 3.12."""
    session.install("-e", ".[dev]", "pytest-cov")
    session.run("pytest", "--cov=ultramonad", "ultramonad/tests")


@nox.session(python="3.12")
def lint(session: Session):
    """Lint using Flake8"""
    session.install(
        "flake8",
        "flake8-bugbear",
    )
    session.run("flake8", "--max-line-length", "120", "ultramonad")

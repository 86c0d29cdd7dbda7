"""Entry point for python -m persum."""

from .cli import run

if __name__ == "__main__":
    run()

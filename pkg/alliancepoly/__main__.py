"""Allow running as python -m alliancepoly."""

from .cli import main

if __name__ == "__main__":
    main()

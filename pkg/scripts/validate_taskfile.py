#!/usr/bin/env python3
"""
Validate task files before committing.

Usage:
    python scripts/validate_taskfile.py taskfiles/so3_currents.json
    python scripts/validate_taskfile.py  # validates all task files
"""

import sys
from pathlib import Path

# Add src to path
sys.path.insert(0, str(Path(__file__).parent.parent))

from src.dgla.errors import TaskFileError
from src.orchestrator.registry import Registry
from src.utils.config_parser import find_taskfiles, parse_taskfile


def validate_single_taskfile(path: Path) -> bool:
    """Parse a task file and resolve every name it defines."""
    try:
        taskfile = parse_taskfile(path)
        Registry(taskfile)
    except TaskFileError as e:
        print(f"❌ Invalid task file: {path}")
        print(f"   Error: {e}")
        return False

    print(f"✅ Valid task file: {path}")
    for name, section in taskfile.defined_names().items():
        print(f"   {section}: {name}")
    print(f"   Tasks: {len(taskfile.tasks)}")
    return True


def validate_all_taskfiles() -> bool:
    taskfiles = find_taskfiles()

    if not taskfiles:
        print("No task files found in taskfiles/")
        return True

    print(f"Found {len(taskfiles)} task file(s):\n")

    all_valid = True
    for path in taskfiles.values():
        all_valid = validate_single_taskfile(path) and all_valid
        print()
    return all_valid


def main():
    """Main entry point."""
    if len(sys.argv) > 1:
        path = Path(sys.argv[1])
        if not path.exists():
            print(f"Error: File not found: {path}")
            sys.exit(1)
        sys.exit(0 if validate_single_taskfile(path) else 1)

    if validate_all_taskfiles():
        print("All task files are valid! ✨")
        sys.exit(0)
    print("Some task files have errors. Please fix them before committing.")
    sys.exit(1)


if __name__ == "__main__":
    main()

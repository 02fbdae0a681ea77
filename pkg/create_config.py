"""
Create a configuration file for the UECSM toolkit.
"""
import json
import sys

from config import DEFAULT_CONFIG


# Create the configuration file
def create_config_file(config_path="config.json"):
    """Write the default settings to a JSON file for editing."""
    with open(config_path, "w") as f:
        json.dump(DEFAULT_CONFIG, f, indent=4)

    print(f"Configuration file created: {config_path}")
    print("Edit the tolerances or campaign defaults, then pass it with --config.")


if __name__ == "__main__":
    create_config_file(sys.argv[1] if len(sys.argv) > 1 else "config.json")

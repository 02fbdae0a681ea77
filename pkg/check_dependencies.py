"""
Check if all the required dependencies are installed.
"""
import importlib.util


def check_dependency(package_name, friendly_name=None):
    """Check if a package is installed."""
    if friendly_name is None:
        friendly_name = package_name

    spec = importlib.util.find_spec(package_name)
    if spec is None:
        print(f"❌ {friendly_name} is NOT installed")
        return False
    else:
        print(f"✅ {friendly_name} is installed")
        return True


def main():
    """Check all dependencies."""
    print("Checking dependencies for the UECSM toolkit...")
    print("\nCore dependencies:")
    core_deps = [
        ("numpy", "NumPy"),
        ("pandas", "Pandas"),
        ("dotenv", "python-dotenv")
    ]

    core_installed = all([check_dependency(pkg, name) for pkg, name in core_deps])

    print("\nTest dependencies:")
    test_installed = check_dependency("pytest", "pytest")

    print("\nSummary:")
    if core_installed:
        print("✅ All core dependencies are installed")
    else:
        print("❌ Some core dependencies are missing")
        print("   Run: pip install -r requirements.txt")

    if not test_installed:
        print("⚠️ pytest is missing; python run_tests.py still works with unittest")

    if core_installed:
        print("\nTry it with:")
        print("python main.py examples T1 | python main.py test -")


if __name__ == "__main__":
    main()

#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Verify Installation - Evrard Replacement Toolkit
================================================

This script verifies that all dependencies are correctly installed
and that a small replacement can be built and checked.

Usage: python verify_install.py
"""

import subprocess
import sys


def install_dependencies():
    """Install the packages listed in requirements.txt"""
    print("🔧 Installing dependencies...")
    try:
        subprocess.check_call(
            [sys.executable, "-m", "pip", "install", "-r", "requirements.txt", "-q"],
            stdout=subprocess.DEVNULL,
            stderr=subprocess.DEVNULL
        )
        print("✅ Installation complete")
    except subprocess.CalledProcessError:
        print("⚠️  Error installing requirements.txt")


def verify_installation():
    """Verify that all modules are correctly installed"""
    print("\n🔍 Verifying installation...")

    modules = {
        'networkx': 'networkx',
        'numpy': 'numpy',
        'pandas': 'pandas',
        'openpyxl': 'openpyxl',
        'pytest': 'pytest',
    }

    all_ok = True
    for name, import_path in modules.items():
        try:
            __import__(import_path)
            print(f"   ✅ {name}")
        except ImportError as e:
            print(f"   ❌ {name} - {e}")
            all_ok = False

    if all_ok:
        print("\n🎉 All dependencies are correctly installed")
    else:
        print("\n⚠️  Some dependencies are missing. Run installation again.")
    return all_ok


def test_module():
    """Build ℋ(id_𝓘) at stage 1 and check its strict identities"""
    print("\n🧪 Testing the evrard package...")

    try:
        from evrard.categories.standard import interval_identity
        from evrard.homology.chains import format_homology, homology_of_category
        from evrard.paths.replacement import build_replacement, check_replacement_identities

        f = interval_identity()
        print(f"   ✅ {f.name}: H = {format_homology(homology_of_category(f.source, 1))}")

        stage = build_replacement(f, 1, "le")
        H = stage.category
        print(f"   ✅ {H.name}: {H.num_objects} objects, {H.num_morphisms} morphisms")

        report = check_replacement_identities(stage)
        if not report.passed:
            print(report.summary())
            return False
        print("   ✅ q∘i = id, f_h∘i = f")
        print("\n✅ Package works correctly")
        return True

    except Exception as e:
        print(f"\n❌ Error testing package: {e}")
        return False


def show_files():
    """Display available files"""
    print("\n📁 Project files:")
    print("   • evrard/                  → Library (categories, paths, homology, checks)")
    print("   • evrard_verifier.py       → Runs every check on one functor")
    print("   • evrard_cli.py            → Command-line front end")
    print("   • config_loader.py         → JSON documents and run configuration")
    print("   • interval_replacement.py  → Example: ℋ(id_𝓘)")
    print("   • negative_control.py      → Example: disc2 → 𝓘")
    print("   • evrard_config.json       → Defaults and corpus list")
    print("   • corpus/                  → Example categories and functors")
    print("   • README.md                → Complete documentation")
    print("   • QUICKSTART.md            → Quick start guide")


def main():
    """Main function"""
    print("=" * 70)
    print(" 🧮 SETUP - EVRARD REPLACEMENT TOOLKIT")
    print("=" * 70)

    install_dependencies()

    if verify_installation():
        if test_module():
            show_files()

            print("\n" + "=" * 70)
            print(" ✅ READY TO USE")
            print("=" * 70)
            print("\n📝 Next steps:")
            print("   1. Run: python interval_replacement.py")
            print("      or:  python negative_control.py")
            print("   2. Review: QUICKSTART.md")
            print("   3. Customize: evrard_config.json")
            print("\n💡 For more details, see README.md")
            print("=" * 70)
        else:
            print("\n⚠️  There are issues with the evrard package")
    else:
        print("\n⚠️  Complete dependency installation first")


if __name__ == "__main__":
    main()

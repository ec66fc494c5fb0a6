import sys
sys.path.insert(0, 'src')

from skeinverse import cli

if __name__ == "__main__":
    sys.exit(cli.main())

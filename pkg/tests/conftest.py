import sys
from pathlib import Path

# allow plain `import strategies` / `import bruteforce` from test modules
sys.path.insert(0, str(Path(__file__).parent))

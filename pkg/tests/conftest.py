import sys
from pathlib import Path

# lets test modules share fixtures such as the worked-example path
sys.path.insert(0, str(Path(__file__).parent))

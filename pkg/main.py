import asyncio
import sys

from source import run_toolkit


async def main() -> int:
    """
    Run one toolkit command; the exit code is 0 on pass, 1 on a failed check, 2 on a usage error.
    """
    return await run_toolkit(sys.argv[1:])

if __name__ == '__main__':
    sys.exit(asyncio.run(main()))

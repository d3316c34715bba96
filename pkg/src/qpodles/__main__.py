from qpodles.cli import run

run()

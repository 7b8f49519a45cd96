from adesing.cli import main

main()

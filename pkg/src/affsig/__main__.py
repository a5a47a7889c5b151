from affsig.cli import main

main()

from subsetsums.cli import main

main()

from ergodic.cli import main

main()

from qlatk.cli import main

main()

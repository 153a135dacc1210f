from partition_lab.cli import main

main()

from lahnet.main import main

main()

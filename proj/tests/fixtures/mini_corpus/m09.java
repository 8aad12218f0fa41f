System.out.println("hi");
